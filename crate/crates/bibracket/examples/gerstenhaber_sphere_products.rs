//! Double bracket on the loop-space model of S^2 x S^3 and the
//! Gerstenhaber structure it induces.

use bibracket::bracket::Evaluator;
use bibracket::expr::parse_element;
use bibracket::presets::sphere_products;
use bibracket::report::all_pass;

fn main() {
    let m = sphere_products(&[(2, 3)]);
    let ev = Evaluator::new(&m.alg, &m.bibracket);
    println!("model: S^2 x S^3, |x| = 1, |y| = 2, bracket degree {}", ev.d());

    // the axioms, swept over all words of length <= 3
    let report = ev.check_gerstenhaber(3).expect("evaluation");
    for c in &report {
        println!("  [{}] {} ({} cases)", if c.pass { "ok" } else { "FAIL" }, c.name, c.cases);
    }
    assert!(all_pass(&report));

    // a few values of the extended bracket
    for (a, b) in [("x", "y"), ("x*y", "y"), ("x*y", "x*y"), ("y*y", "x")] {
        let wa = parse_element(&m.alg, a).unwrap();
        let wb = parse_element(&m.alg, b).unwrap();
        let v = ev.bb_eval(&wa, &wb).unwrap();
        println!("<<{a}, {b}>> = {}", v.display(&m.alg));
    }

    // the induced bracket on cyclic words vanishes less often
    let report = ev.check_assoc_bracket(3).expect("evaluation");
    assert!(all_pass(&report));
    println!("associated bracket passes antisymmetry and Jacobi up to length 3");
}
