//! Moment maps for a bibracket: an element μ of degree -d satisfying
//!
//!   ⟨⟨μ, a⟩⟩ = a⊗1 - 1⊗a   for all a,
//!
//! where 1 is the sum of the unit paths. The degree constraint is checked
//! up front; the identity itself is swept over words of bounded length,
//! in both slots independently.

use thiserror::Error;

use crate::algebra::Word;
use crate::bracket::{BracketError, Evaluator};
use crate::ncpoly::NCPoly;
use crate::report::{AxiomReport, CheckResult, Witness};
use crate::scalar::{One, Scalar};
use crate::tensor::TensorPoly;

#[derive(Debug, Error)]
pub enum MomentError {
    #[error("moment element must be homogeneous of degree {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: String },
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

#[derive(Debug, Clone)]
pub struct MomentSpec {
    pub mu: NCPoly,
}

impl MomentSpec {
    pub fn new(mu: NCPoly) -> Self {
        MomentSpec { mu }
    }
}

/// ⟨⟨μ,a⟩⟩ for a: X→Y has legs typed Hom(X,Z)⊗Hom(Z,Y), so the unit in
/// a⊗1 sits at the target of a and the unit in 1⊗a at its source.
fn expected_left(w: &Word, alg: &crate::algebra::Algebra) -> TensorPoly {
    let mut t = TensorPoly::from_term(vec![w.clone(), Word::unit(w.target(alg))], Scalar::one());
    t.add_term(vec![Word::unit(w.source()), w.clone()], -Scalar::one());
    t
}

/// In the other slot the typing is Hom(Z,Y)⊗Hom(X,Z): units swap roles.
fn expected_right(w: &Word, alg: &crate::algebra::Algebra) -> TensorPoly {
    let mut t = TensorPoly::from_term(vec![w.clone(), Word::unit(w.source())], Scalar::one());
    t.add_term(vec![Word::unit(w.target(alg)), w.clone()], -Scalar::one());
    t
}

/// Verify the moment identity over unit words and words of length
/// ≤ maxlen. Both ⟨⟨μ,a⟩⟩ and ⟨⟨a,μ⟩⟩ are computed from the table by the
/// Leibniz rules, with no appeal to antisymmetry of the table.
pub fn check_moment(
    ev: &Evaluator,
    m: &MomentSpec,
    maxlen: usize,
) -> Result<AxiomReport, MomentError> {
    let alg = ev.alg;
    let want = -ev.d();
    for (w, _) in m.mu.terms() {
        let found = w.degree(alg);
        if found != want {
            return Err(MomentError::DegreeMismatch {
                expected: want,
                found: format!("term {} of degree {found}", w.display(alg)),
            });
        }
    }

    let mut pool: Vec<Word> = alg.objects().map(Word::unit).collect();
    pool.extend(alg.words_up_to(maxlen));

    let mut checks = Vec::new();

    {
        let mut fail = None;
        for w in &pool {
            let wp = NCPoly::from_term(w.clone(), Scalar::one());
            let got = ev.bb_eval(&m.mu, &wp)?;
            let want = if w.is_unit() {
                TensorPoly::zero(2)
            } else {
                expected_left(w, alg)
            };
            if got != want {
                fail = Some(Witness {
                    inputs: vec![w.display(alg)],
                    lhs: got.display(alg),
                    rhs: want.display(alg),
                });
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "moment-identity",
                pool.len(),
                "⟨⟨μ,a⟩⟩ = a⊗1 - 1⊗a",
            ),
            Some(w) => CheckResult::failed("moment-identity", pool.len(), "mismatch", w),
        });
    }

    {
        let mut fail = None;
        for w in &pool {
            let wp = NCPoly::from_term(w.clone(), Scalar::one());
            let got = ev.bb_eval(&wp, &m.mu)?;
            let want = if w.is_unit() {
                TensorPoly::zero(2)
            } else {
                expected_right(w, alg)
            };
            if got != want {
                fail = Some(Witness {
                    inputs: vec![w.display(alg)],
                    lhs: got.display(alg),
                    rhs: want.display(alg),
                });
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "moment-identity-transposed",
                pool.len(),
                "⟨⟨a,μ⟩⟩ = a⊗1 - 1⊗a",
            ),
            Some(w) => {
                CheckResult::failed("moment-identity-transposed", pool.len(), "mismatch", w)
            }
        });
    }

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{single_object, Algebra};
    use crate::bracket::BibracketSpec;
    use crate::expr::parse_element;
    use crate::report::all_pass;

    fn laurent_fixture(n: i64) -> (Algebra, BibracketSpec) {
        let (alg, _) = single_object(&[("x", 0, true), ("y", n - 2, false)]);
        let spec = BibracketSpec::from_exprs(
            &alg,
            2 - n,
            &[
                ("x", "x", "0"),
                ("x", "y", "(-1) * x (x) 1"),
                ("y", "x", "1 (x) x"),
                ("y", "y", "1 (x) y + (-1) * y (x) 1"),
            ],
        )
        .unwrap();
        (alg, spec)
    }

    fn sphere_fixture(p: i64, q: i64) -> (Algebra, BibracketSpec) {
        let (alg, _) = single_object(&[("x", p - 1, false), ("y", q - 1, false)]);
        let sxy = if (q * (p + 1) + 1).rem_euclid(2) == 0 { "" } else { "(-1) * " };
        let syx = if (p + 1).rem_euclid(2) == 0 { "" } else { "(-1) * " };
        let spec = BibracketSpec::from_exprs(
            &alg,
            2 - (p + q),
            &[
                ("x", "x", "0"),
                ("x", "y", &format!("{sxy}1 (x) 1")),
                ("y", "x", &format!("{syx}1 (x) 1")),
                ("y", "y", "0"),
            ],
        )
        .unwrap();
        (alg, spec)
    }

    #[test]
    fn laurent_moment_passes() {
        for n in [3i64, 4] {
            let (alg, spec) = laurent_fixture(n);
            let ev = Evaluator::new(&alg, &spec);
            let mu = parse_element(&alg, "x^-1*y*x + (-1) * y").unwrap();
            let m = MomentSpec::new(mu);
            let report = check_moment(&ev, &m, 3).unwrap();
            assert!(all_pass(&report), "n = {n}: {report:?}");
        }
    }

    #[test]
    fn sphere_moment_passes() {
        // μ = (-1)^p (xy - (-1)^{|x||y|} yx); for (p,q) = (2,3) this is
        // xy - yx.
        let (alg, spec) = sphere_fixture(2, 3);
        let ev = Evaluator::new(&alg, &spec);
        let mu = parse_element(&alg, "x*y + (-1) * y*x").unwrap();
        let m = MomentSpec::new(mu);
        let report = check_moment(&ev, &m, 3).unwrap();
        assert!(all_pass(&report), "{report:?}");

        // (p,q) = (3,2): |x||y| is even, so μ = -(xy - yx).
        let (alg2, spec2) = sphere_fixture(3, 2);
        let ev2 = Evaluator::new(&alg2, &spec2);
        let mu2 = parse_element(&alg2, "y*x - x*y").unwrap();
        let report2 = check_moment(&ev2, &MomentSpec::new(mu2), 3).unwrap();
        assert!(all_pass(&report2), "{report2:?}");
    }

    #[test]
    fn zero_moment_fails_with_witness() {
        let (alg, spec) = laurent_fixture(3);
        let ev = Evaluator::new(&alg, &spec);
        let m = MomentSpec::new(NCPoly::zero());
        let report = check_moment(&ev, &m, 2).unwrap();
        assert!(!all_pass(&report));
        let bad = report.iter().find(|c| !c.pass).unwrap();
        assert!(bad.witness.is_some());
    }

    #[test]
    fn wrong_degree_is_rejected() {
        let (alg, spec) = laurent_fixture(3);
        let ev = Evaluator::new(&alg, &spec);
        // degree 0, but -d = 1
        let mu = parse_element(&alg, "x").unwrap();
        let err = check_moment(&ev, &MomentSpec::new(mu), 2).unwrap_err();
        assert!(matches!(err, MomentError::DegreeMismatch { expected: 1, .. }));
    }

    #[test]
    fn wrong_element_fails_identity() {
        let (alg, spec) = laurent_fixture(3);
        let ev = Evaluator::new(&alg, &spec);
        // right degree, wrong element
        let mu = parse_element(&alg, "y").unwrap();
        let report = check_moment(&ev, &MomentSpec::new(mu), 2).unwrap();
        assert!(!all_pass(&report));
    }
}
