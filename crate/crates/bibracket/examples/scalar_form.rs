//! Contracting the bracket pairing with the counit produces a scalar
//! form on the algebra, antisymmetric up to the usual sign.

use bibracket::bracket::Evaluator;
use bibracket::expr::parse_element;
use bibracket::hopf::{check_reducible, check_scalar_form, lambda_reduced, scalar_form};
use bibracket::presets::s1_x_sn1;
use bibracket::report::all_pass;

fn main() {
    let m = s1_x_sn1(3);
    let ev = Evaluator::new(&m.alg, &m.bibracket);
    let h = &m.hopf;

    for (a, b) in [("y", "x"), ("x", "y"), ("x*y", "x"), ("y", "x*x")] {
        let pa = parse_element(&m.alg, a).unwrap();
        let pb = parse_element(&m.alg, b).unwrap();
        let lam = lambda_reduced(&ev, h, &pa, &pb).unwrap();
        let s = scalar_form(&ev, Some(h), &pa, &pb).unwrap();
        println!("lambda({a}, {b}) = {}", lam.display(&m.alg));
        println!("<{a}, {b}>      = {s}");
    }

    let report = check_scalar_form(&m.alg, &m.bibracket, Some(h), 3).unwrap();
    for c in &report {
        println!("[{}] {} ({} cases)", if c.pass { "ok" } else { "FAIL" }, c.name, c.cases);
    }
    assert!(all_pass(&report));

    let report = check_reducible(&m.alg, &m.bibracket, h, 3).unwrap();
    assert!(all_pass(&report));
    println!("the bracket is reducible: it descends along the counit");
}
