//! Frozen values for the shipped models: bracket tables, reduced
//! brackets, scalar forms, Hopf values, and traces, all compared
//! exactly.

use bibracket::bracket::Evaluator;
use bibracket::expr::{parse_element, parse_tensor2};
use bibracket::ncpoly::NCPoly;
use bibracket::presets::{s1_x_sn1, sphere_products};
use bibracket::reduce::{reduce_H0, CommPoly};
use bibracket::repalg::{trace, RepBracket};
use bibracket::report::all_pass;
use bibracket::scalar::int;
use bibracket::hopf::scalar_form;

#[test]
fn sphere_reduced_sign_table() {
    // {X,Y} = (-1)^{q(p+1)+1} for one sphere pair
    for (p, q) in [(2i64, 3i64), (3, 2), (2, 2), (3, 3)] {
        let m = sphere_products(&[(p, q)]);
        let ev = Evaluator::new(&m.alg, &m.bibracket);
        let qp = m.reduction.as_ref().unwrap();
        let (rb, checks) = reduce_H0(&ev, &m.moment, qp, 3).unwrap();
        assert!(all_pass(&checks), "(p,q) = ({p},{q})");
        let t = &qp.target;
        let sign = if (q * (p + 1) + 1).rem_euclid(2) == 0 { 1 } else { -1 };
        let expect = CommPoly::e(t).scale(&int(sign));
        assert_eq!(
            rb.table_entry(0, 1).unwrap(),
            &expect,
            "(p,q) = ({p},{q})"
        );
        assert!(rb.table_entry(0, 0).unwrap().is_zero());
        assert!(rb.table_entry(1, 1).unwrap().is_zero());
    }
}

#[test]
fn laurent_reduced_table_every_n() {
    for n in [3, 4, 5] {
        let m = s1_x_sn1(n);
        let ev = Evaluator::new(&m.alg, &m.bibracket);
        let q = m.reduction.as_ref().unwrap();
        let (rb, checks) = reduce_H0(&ev, &m.moment, q, 3).unwrap();
        assert!(all_pass(&checks), "n = {n}");
        let t = &q.target;
        assert_eq!(rb.table_entry(0, 1).unwrap(), &CommPoly::var(t, 0, 1).neg());
        assert_eq!(rb.table_entry(1, 0).unwrap(), &CommPoly::var(t, 0, 1));
        assert!(rb.table_entry(0, 0).unwrap().is_zero());
        assert!(rb.table_entry(1, 1).unwrap().is_zero());

        // inverse generator classes work through the same pairing
        let xinv = parse_element(&m.alg, "x^-1").unwrap();
        let y = parse_element(&m.alg, "y").unwrap();
        assert_eq!(
            rb.pairing(&xinv, &y).unwrap(),
            CommPoly::var(t, 0, -1),
            "n = {n}"
        );
    }
}

#[test]
fn bracket_values_frozen() {
    let m = s1_x_sn1(3);
    let ev = Evaluator::new(&m.alg, &m.bibracket);
    for (a, b, expect) in [
        ("x", "y", "(-1) * x (x) 1"),
        ("x^-1", "y", "1 (x) x^-1"),
        ("x^-2", "y", "1 (x) x^-1*x^-1 + x^-1 (x) x^-1"),
        ("y", "x^-1", "(-1) * x^-1 (x) 1"),
        ("x^-1*y*x", "x", "x (x) 1"),
        ("y*y", "y", "1 (x) y*y + (-1) * y*y (x) 1"),
    ] {
        let pa = parse_element(&m.alg, a).unwrap();
        let pb = parse_element(&m.alg, b).unwrap();
        let want = parse_tensor2(&m.alg, expect).unwrap();
        assert_eq!(ev.bb_eval(&pa, &pb).unwrap(), want, "<<{a}, {b}>>");
    }

    let m2 = sphere_products(&[(2, 3), (3, 2)]);
    let ev2 = Evaluator::new(&m2.alg, &m2.bibracket);
    for (a, b, expect) in [
        ("x1", "y1", "1 (x) 1"),
        ("x2", "y2", "(-1) * 1 (x) 1"),
        ("x1", "y2", "0"),
        ("x2", "y1", "0"),
        ("x1*x2", "y1", "x2 (x) 1"),
    ] {
        let pa = parse_element(&m2.alg, a).unwrap();
        let pb = parse_element(&m2.alg, b).unwrap();
        let want = parse_tensor2(&m2.alg, expect).unwrap();
        assert_eq!(ev2.bb_eval(&pa, &pb).unwrap(), want, "<<{a}, {b}>>");
    }
}

#[test]
fn assoc_bracket_and_scalar_form_frozen() {
    let m = s1_x_sn1(3);
    let ev = Evaluator::new(&m.alg, &m.bibracket);
    let x = parse_element(&m.alg, "x").unwrap();
    let y = parse_element(&m.alg, "y").unwrap();

    assert_eq!(ev.assoc_bracket(&x, &y).unwrap(), x.neg());
    assert_eq!(ev.assoc_bracket(&y, &x).unwrap(), x);
    assert!(ev.assoc_bracket(&x, &x).unwrap().is_zero());

    let h = &m.hopf;
    assert_eq!(scalar_form(&ev, Some(h), &x, &y).unwrap(), int(-1));
    assert_eq!(scalar_form(&ev, Some(h), &y, &x).unwrap(), int(1));
    assert_eq!(scalar_form(&ev, Some(h), &x, &x).unwrap(), int(0));
    assert_eq!(scalar_form(&ev, Some(h), &y, &y).unwrap(), int(0));

    let m2 = sphere_products(&[(2, 3)]);
    let ev2 = Evaluator::new(&m2.alg, &m2.bibracket);
    let x2 = parse_element(&m2.alg, "x").unwrap();
    let y2 = parse_element(&m2.alg, "y").unwrap();
    assert_eq!(ev2.assoc_bracket(&x2, &y2).unwrap(), NCPoly::one(&m2.alg));
    assert_eq!(
        scalar_form(&ev2, Some(&m2.hopf), &x2, &y2).unwrap(),
        int(1)
    );
}

#[test]
fn hopf_values_frozen() {
    let m = s1_x_sn1(3);
    let h = &m.hopf;
    let alg = &m.alg;

    let x = parse_element(alg, "x").unwrap();
    let y = parse_element(alg, "y").unwrap();
    let xy = parse_element(alg, "x*y").unwrap();

    assert_eq!(
        h.coproduct(alg, &x).unwrap(),
        parse_tensor2(alg, "x (x) x").unwrap()
    );
    assert_eq!(
        h.coproduct(alg, &y).unwrap(),
        parse_tensor2(alg, "y (x) 1 + 1 (x) y").unwrap()
    );
    assert_eq!(
        h.coproduct(alg, &xy).unwrap(),
        parse_tensor2(alg, "x*y (x) x + x (x) x*y").unwrap()
    );

    assert_eq!(h.antipode(alg, &x).unwrap(), parse_element(alg, "x^-1").unwrap());
    assert_eq!(h.antipode(alg, &y).unwrap(), y.neg());
    assert_eq!(h.counit(alg, &x), int(1));
    assert_eq!(h.counit(alg, &y), int(0));
    assert_eq!(h.counit(alg, &xy), int(0));
}

#[test]
fn trace_values_frozen() {
    let m = sphere_products(&[(2, 3)]);
    let ev = Evaluator::new(&m.alg, &m.bibracket);
    let rb = RepBracket::new(&ev, 2);
    let spz = rb.specialization();

    let x = parse_element(&m.alg, "x").unwrap();
    let t = trace(&m.alg, &x, 2, spz).unwrap();
    assert_eq!(t.display(), "(1) * x_11 + (1) * x_22");

    // the bracket of traces reproduces the N=1 table pattern summed
    // over indices: tr{x, y} = 2 here since <<x,y>> = 1 (x) 1
    let y = parse_element(&m.alg, "y").unwrap();
    let ty = trace(&m.alg, &y, 2, spz).unwrap();
    let v = rb.bracket(&t, &ty).unwrap();
    assert_eq!(v.display(), "(2) * e");
}
