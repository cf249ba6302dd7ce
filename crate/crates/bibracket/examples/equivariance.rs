//! GL_N acts on entry symbols by conjugation and gl_N by the induced
//! derivation; both leave the representation bracket invariant.

use bibracket::matrix::QMatrix;
use bibracket::presets::{s1_x_sn1, sphere_products};
use bibracket::repalg::{act_and_check, ActionInput};
use bibracket::report::all_pass;

fn main() {
    let n = 2;

    let g = QMatrix::from_int_rows(&[&[1, 2], &[0, 1]]);
    let w = QMatrix::from_int_rows(&[&[3, 0], &[1, -1]]);

    let m = sphere_products(&[(2, 3)]);
    for (label, input) in [
        ("group element", ActionInput::Group(g.clone())),
        ("Lie element", ActionInput::Lie(w.clone())),
    ] {
        let report = act_and_check(&m.alg, &m.bibracket, n, &input).unwrap();
        assert!(all_pass(&report), "{label}");
        for c in &report {
            println!("S^2 x S^3, {label}: [ok] {} ({} cases)", c.name, c.cases);
        }
    }

    // same sweep on the Laurent model, where x_ij has an inverse matrix
    let m = s1_x_sn1(3);
    for input in [ActionInput::Group(g), ActionInput::Lie(w)] {
        let report = act_and_check(&m.alg, &m.bibracket, n, &input).unwrap();
        assert!(all_pass(&report));
    }
    println!("S^1 x S^2: equivariance passes for the same g and w");
}
