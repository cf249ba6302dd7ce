//! The double bracket induces an honest graded bracket on the entry
//! symbols a_ij of N-dimensional representations. Here the symbols stay
//! symbolic, so every identity below is exact.

use bibracket::bracket::Evaluator;
use bibracket::presets::sphere_products;
use bibracket::repalg::{check_repalg_axioms, RepBracket};
use bibracket::report::all_pass;

fn main() {
    let m = sphere_products(&[(2, 3)]);
    let ev = Evaluator::new(&m.alg, &m.bibracket);
    let n = 2;
    let rb = RepBracket::new(&ev, n);

    let gens: Vec<_> = m.alg.gens().collect();
    let (x, y) = (gens[0], gens[1]);

    println!("entry brackets for N = {n}:");
    for i in 1..=n {
        for j in 1..=n {
            let xij = rb.gen_entry(x, i, j);
            for k in 1..=n {
                for l in 1..=n {
                    let ykl = rb.gen_entry(y, k, l);
                    let v = rb.bracket(&xij, &ykl).unwrap();
                    if !v.is_zero() {
                        println!("  {{x_{i}{j}, y_{k}{l}}} = {}", v.display());
                    }
                }
            }
        }
    }

    // antisymmetry, Leibniz, and Jacobi on sampled entry polynomials
    let report = check_repalg_axioms(&m.alg, &m.bibracket, n, 7, 25).unwrap();
    for c in &report {
        println!("[{}] {} ({} cases)", if c.pass { "ok" } else { "FAIL" }, c.name, c.cases);
    }
    assert!(all_pass(&report));
}
