//! Traces turn the representation bracket into a bracket of central
//! functions: tr{a, b} only depends on the cyclic classes of a and b,
//! and the trace map intertwines the two brackets.

use bibracket::bracket::Evaluator;
use bibracket::expr::parse_element;
use bibracket::presets::s1_x_sn1;
use bibracket::repalg::{check_trace_compat, trace, RepBracket};
use bibracket::report::all_pass;

fn main() {
    let m = s1_x_sn1(3);
    let n = 2;

    let xy = parse_element(&m.alg, "x*y").unwrap();
    let yx = parse_element(&m.alg, "y*x").unwrap();

    let ev = Evaluator::new(&m.alg, &m.bibracket);
    let rb = RepBracket::new(&ev, n);
    let spz = rb.specialization();

    let t_xy = trace(&m.alg, &xy, n, spz).unwrap();
    let t_yx = trace(&m.alg, &yx, n, spz).unwrap();
    println!("tr(xy) = {}", t_xy.display());
    // |x| = 0, so the Koszul sign relating tr(xy) to tr(yx) is +1
    assert_eq!(t_xy, t_yx);
    println!("tr(xy) = tr(yx) as exact symbol polynomials");

    for nn in [1, 2] {
        let report = check_trace_compat(&m.alg, &m.bibracket, nn, 3, 11).unwrap();
        assert!(all_pass(&report), "N = {nn}");
        for c in &report {
            println!("N = {nn}: [ok] {} ({} cases)", c.name, c.cases);
        }
    }
}
