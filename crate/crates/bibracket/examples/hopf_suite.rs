//! Coproduct, counit, and antipode on both built-in models, checked
//! against the Hopf axioms on words.

use bibracket::expr::parse_element;
use bibracket::hopf::check_hopf;
use bibracket::presets::{s1_x_sn1, sphere_products};
use bibracket::report::all_pass;

fn main() {
    let m = s1_x_sn1(3);
    let h = &m.hopf;

    for e in ["x", "y", "x*y", "x^-1", "y*y"] {
        let p = parse_element(&m.alg, e).unwrap();
        let cop = h.coproduct(&m.alg, &p).unwrap();
        let s = h.antipode(&m.alg, &p).unwrap();
        println!("D({e}) = {}", cop.display(&m.alg));
        println!("s({e}) = {}", s.display(&m.alg));
        println!("eps({e}) = {}", h.counit(&m.alg, &p));
    }

    let report = check_hopf(&m.alg, h, 3).unwrap();
    for c in &report {
        println!("[{}] {} ({} cases)", if c.pass { "ok" } else { "FAIL" }, c.name, c.cases);
    }
    assert!(all_pass(&report));

    // all-primitive model: the antipode is the graded inversion
    let m2 = sphere_products(&[(2, 3)]);
    let report2 = check_hopf(&m2.alg, &m2.hopf, 3).unwrap();
    assert!(all_pass(&report2));
    let xy = parse_element(&m2.alg, "x*y").unwrap();
    println!(
        "S^2 x S^3: s(xy) = {}",
        m2.hopf.antipode(&m2.alg, &xy).unwrap().display(&m2.alg)
    );
}
