//! Graded Lie algebras by structure constants: PBW normal forms in the
//! enveloping algebra, and the presentation of the algebra of
//! N-dimensional representations.

use bibracket::lie::{check_lie, lie_rep_presentation, pbw_normal_form, GradedLie};
use bibracket::report::all_pass;

fn main() {
    // Heisenberg: [a,b] = c, everything else zero
    let heis = GradedLie::new(
        &[("a", 0), ("b", 0), ("c", 0)],
        &[("a", "b", &[(1, "c")])],
    )
    .unwrap();

    // b*a reorders to a*b - c
    let nf = pbw_normal_form(&heis, &[1, 0]);
    println!("ba  ->  {}", nf.display(&heis));
    let nf = pbw_normal_form(&heis, &[2, 1, 0]);
    println!("cba ->  {}", nf.display(&heis));

    // an odd element with [z,z] = h: z^2 rewrites to h/2
    let odd = GradedLie::new(
        &[("z", 1), ("h", 2)],
        &[("z", "z", &[(1, "h")])],
    )
    .unwrap();
    let nf = pbw_normal_form(&odd, &[0, 0]);
    println!("zz  ->  {}", nf.display(&odd));

    for (name, lie, n) in [("heisenberg", &heis, 3), ("odd", &odd, 2)] {
        let report = check_lie(lie, n, 5, 4);
        for c in &report {
            println!(
                "{name}: [{}] {} ({} cases)",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.cases
            );
        }
        assert!(all_pass(&report));
    }

    // entry relations of the representation presentation for N = 2
    let (pres, _) = lie_rep_presentation(&heis, 2, 0);
    for (k, (a, b, i, j, rel)) in pres.relations.iter().enumerate().take(4) {
        println!(
            "relation {k}: [{},{}]_{i}{j} - bracket = {}",
            heis.name(*a),
            heis.name(*b),
            rel.display()
        );
    }
}
