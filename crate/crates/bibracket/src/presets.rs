//! Built-in models. Both families come with a bibracket table, a Hopf
//! structure, a moment element, and (where the quotient is polynomial)
//! a reduction presentation, so examples and tests can grab a complete
//! setup in one call.

use crate::algebra::{single_object, Algebra};
use crate::bracket::BibracketSpec;
use crate::expr::parse_element;
use crate::hopf::{CoproductKind, HopfDecl};
use crate::moment::MomentSpec;
use crate::reduce::{CommTarget, QuotientPresentation};

/// A fully wired model: algebra, bibracket, Hopf structure, moment
/// element, and optionally a presentation of the reduced algebra.
pub struct ModelData {
    pub alg: Algebra,
    pub bibracket: BibracketSpec,
    pub hopf: HopfDecl,
    pub moment: MomentSpec,
    pub reduction: Option<QuotientPresentation>,
}

/// Loop-space model of a connected sum of `g` sphere products
/// `S^{p_1} x S^{q_1} # ... # S^{p_g} x S^{q_g}` with all `p_j + q_j`
/// equal and all `p_j, q_j >= 2`. Generators `x_j` of degree `p_j - 1`
/// and `y_j` of degree `q_j - 1`, bibracket of degree `2 - n`
/// concentrated on same-index pairs:
///
/// ```text
/// <<x_j, y_j>> = (-1)^{q_j (p_j + 1) + 1} 1 (x) 1
/// <<y_j, x_j>> = (-1)^{p_j + 1}           1 (x) 1
/// ```
///
/// All generators are primitive, and the moment element is
/// `sum_j (-1)^{p_j} (x_j y_j - (-1)^{|x_j||y_j|} y_j x_j)`. For `g = 1`
/// the reduced algebra is polynomial and a presentation is included.
///
/// Panics when the pairs are empty, some `p_j + q_j` differ, or some
/// exponent is below 2.
pub fn sphere_products(pairs: &[(i64, i64)]) -> ModelData {
    assert!(!pairs.is_empty(), "need at least one sphere pair");
    let n = pairs[0].0 + pairs[0].1;
    for &(p, q) in pairs {
        assert!(p >= 2 && q >= 2, "sphere exponents must be at least 2");
        assert!(p + q == n, "all sphere pairs must have the same total");
    }
    let g = pairs.len();

    let mut names: Vec<(String, String)> = Vec::new();
    for j in 0..g {
        if g == 1 {
            names.push(("x".to_string(), "y".to_string()));
        } else {
            names.push((format!("x{}", j + 1), format!("y{}", j + 1)));
        }
    }

    let mut decls: Vec<(&str, i64, bool)> = Vec::new();
    for (j, &(p, q)) in pairs.iter().enumerate() {
        decls.push((&names[j].0, p - 1, false));
        decls.push((&names[j].1, q - 1, false));
    }
    let (alg, _) = single_object(&decls);

    let mut entries: Vec<(String, String, String)> = Vec::new();
    let all: Vec<&str> = names
        .iter()
        .flat_map(|(x, y)| [x.as_str(), y.as_str()])
        .collect();
    for a in &all {
        for b in &all {
            entries.push((a.to_string(), b.to_string(), "0".to_string()));
        }
    }
    for (j, &(p, q)) in pairs.iter().enumerate() {
        let (xn, yn) = (&names[j].0, &names[j].1);
        let sxy = if (q * (p + 1) + 1).rem_euclid(2) == 0 { "" } else { "(-1) * " };
        let syx = if (p + 1).rem_euclid(2) == 0 { "" } else { "(-1) * " };
        for e in entries.iter_mut() {
            if e.0 == *xn && e.1 == *yn {
                e.2 = format!("{sxy}1 (x) 1");
            } else if e.0 == *yn && e.1 == *xn {
                e.2 = format!("{syx}1 (x) 1");
            }
        }
    }
    let refs: Vec<(&str, &str, &str)> = entries
        .iter()
        .map(|(a, b, v)| (a.as_str(), b.as_str(), v.as_str()))
        .collect();
    let bibracket = BibracketSpec::from_exprs(&alg, 2 - n, &refs).expect("sphere table");

    let kinds: Vec<(&str, CoproductKind)> = all
        .iter()
        .map(|name| (*name, CoproductKind::Primitive))
        .collect();
    let hopf = HopfDecl::from_kinds(&alg, &kinds).expect("sphere Hopf data");

    let mut terms: Vec<String> = Vec::new();
    for (j, &(p, q)) in pairs.iter().enumerate() {
        let (xn, yn) = (&names[j].0, &names[j].1);
        let sp = p.rem_euclid(2) == 0;
        let t = ((p - 1) * (q - 1)).rem_euclid(2) == 0;
        let lead = if sp { "" } else { "(-1) * " };
        // second term carries -(-1)^p (-1)^{|x||y|}
        let second = if sp == t { "(-1) * " } else { "" };
        terms.push(format!("{lead}{xn}*{yn} + {second}{yn}*{xn}"));
    }
    let moment = MomentSpec::new(parse_element(&alg, &terms.join(" + ")).expect("sphere moment"));

    let reduction = (g == 1).then(|| {
        let (p, q) = pairs[0];
        let target =
            CommTarget::new(&[("X", p - 1, false), ("Y", q - 1, false)]).expect("sphere target");
        QuotientPresentation::new(&alg, target, &[("x", "X"), ("y", "Y")])
            .expect("sphere reduction")
    });

    ModelData {
        alg,
        bibracket,
        hopf,
        moment,
        reduction,
    }
}

/// Loop-space model of `S^1 x S^{n-1}` for `n >= 3`: an invertible
/// group-like `x` of degree 0 and a primitive `y` of degree `n - 2`,
/// with the degree `2 - n` bibracket
///
/// ```text
/// <<x, x>> = 0                <<x, y>> = -x (x) 1
/// <<y, x>> = 1 (x) x          <<y, y>> = 1 (x) y - y (x) 1
/// ```
///
/// Moment element `x^{-1} y x - y`; the reduced algebra is Laurent in
/// the class of `x` and polynomial in the class of `y`.
pub fn s1_x_sn1(n: i64) -> ModelData {
    assert!(n >= 3, "need n >= 3");
    let (alg, _) = single_object(&[("x", 0, true), ("y", n - 2, false)]);
    let bibracket = BibracketSpec::from_exprs(
        &alg,
        2 - n,
        &[
            ("x", "x", "0"),
            ("x", "y", "(-1) * x (x) 1"),
            ("y", "x", "1 (x) x"),
            ("y", "y", "1 (x) y + (-1) * y (x) 1"),
        ],
    )
    .expect("circle table");
    let hopf = HopfDecl::from_kinds(
        &alg,
        &[
            ("x", CoproductKind::GroupLike),
            ("y", CoproductKind::Primitive),
        ],
    )
    .expect("circle Hopf data");
    let moment =
        MomentSpec::new(parse_element(&alg, "x^-1*y*x - y").expect("circle moment"));
    let target =
        CommTarget::new(&[("X", 0, true), ("Y", n - 2, false)]).expect("circle target");
    let reduction = Some(
        QuotientPresentation::new(&alg, target, &[("x", "X"), ("y", "Y")])
            .expect("circle reduction"),
    );

    ModelData {
        alg,
        bibracket,
        hopf,
        moment,
        reduction,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::Evaluator;
    use crate::moment::check_moment;
    use crate::reduce::reduce_H0;
    use crate::report::all_pass;

    #[test]
    fn sphere_g1_full_stack() {
        let m = sphere_products(&[(2, 3)]);
        let ev = Evaluator::new(&m.alg, &m.bibracket);
        assert!(all_pass(&ev.check_gerstenhaber(3).unwrap()));
        assert!(all_pass(&check_moment(&ev, &m.moment, 3).unwrap()));
        let q = m.reduction.unwrap();
        let (_, checks) = reduce_H0(&ev, &m.moment, &q, 3).unwrap();
        assert!(all_pass(&checks));
    }

    #[test]
    fn sphere_g2_moment_passes() {
        let m = sphere_products(&[(2, 3), (3, 2)]);
        assert!(m.reduction.is_none());
        assert_eq!(m.bibracket.degree_d(), -3);
        let ev = Evaluator::new(&m.alg, &m.bibracket);
        assert!(all_pass(&ev.check_gerstenhaber(2).unwrap()));
        assert!(all_pass(&check_moment(&ev, &m.moment, 2).unwrap()));
    }

    #[test]
    fn circle_full_stack() {
        for n in [3, 4] {
            let m = s1_x_sn1(n);
            let ev = Evaluator::new(&m.alg, &m.bibracket);
            assert!(all_pass(&ev.check_gerstenhaber(3).unwrap()));
            assert!(all_pass(&check_moment(&ev, &m.moment, 3).unwrap()));
            let q = m.reduction.unwrap();
            let (_, checks) = reduce_H0(&ev, &m.moment, &q, 3).unwrap();
            assert!(all_pass(&checks));
        }
    }

    #[test]
    #[should_panic(expected = "same total")]
    fn mixed_totals_panic() {
        sphere_products(&[(2, 3), (2, 4)]);
    }
}
