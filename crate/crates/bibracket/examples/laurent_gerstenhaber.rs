//! The S^1 x S^2 model has an invertible degree 0 generator, so words
//! live in a Laurent-type algebra. The bracket of an inverse is forced
//! by the Leibniz rules.

use bibracket::bracket::Evaluator;
use bibracket::expr::parse_element;
use bibracket::presets::s1_x_sn1;
use bibracket::report::all_pass;

fn main() {
    let m = s1_x_sn1(3);
    let ev = Evaluator::new(&m.alg, &m.bibracket);
    println!("model: S^1 x S^2, x invertible of degree 0, |y| = 1, d = {}", ev.d());

    let report = ev.check_gerstenhaber(3).expect("evaluation");
    assert!(all_pass(&report));
    println!("Gerstenhaber axioms pass on words of length <= 3");

    for (a, b) in [
        ("x", "y"),
        ("x^-1", "y"),
        ("x^-1*y*x", "x"),
        ("y", "x^-1"),
        ("x^-2", "y"),
    ] {
        let pa = parse_element(&m.alg, a).unwrap();
        let pb = parse_element(&m.alg, b).unwrap();
        let v = ev.bb_eval(&pa, &pb).unwrap();
        println!("<<{a}, {b}>> = {}", v.display(&m.alg));
    }
}
