//! Reference evaluator, kept deliberately independent of the production
//! one: it recurses on the first argument first, carries its own sign
//! bookkeeping on explicit (coefficient, left leg, right leg) triples, and
//! never touches the tensor action helpers or the memo table. Slow and
//! simple; exists to be compared against.

use crate::algebra::{Algebra, Letter, Word};
use crate::bracket::{BibracketSpec, BracketError};
use crate::ncpoly::NCPoly;
use crate::scalar::{sign_pow, Scalar};
use crate::tensor::TensorPoly;

type Triple = (Scalar, Word, Word);

fn deg_of(alg: &Algebra, s: &[Letter]) -> i64 {
    s.iter().map(|l| alg.degree(l.gen)).sum()
}

fn word_of(alg: &Algebra, s: &[Letter]) -> Word {
    Word::from_letters(alg, s.to_vec()).expect("composable letters")
}

fn prepend(alg: &Algebra, l: Letter, w: &Word) -> Option<Word> {
    let mut letters = vec![l];
    letters.extend_from_slice(w.letters());
    if w.is_unit() {
        if alg.letter_target(l) != w.source() {
            return None;
        }
        return Word::from_letters(alg, letters);
    }
    Word::from_letters(alg, letters)
}

fn append(alg: &Algebra, w: &Word, s: &[Letter]) -> Option<Word> {
    if w.is_unit() {
        let v = word_of(alg, s);
        if w.source() != v.source() {
            return None;
        }
        return Some(v);
    }
    let mut letters = w.letters().to_vec();
    letters.extend_from_slice(s);
    Word::from_letters(alg, letters)
}

fn eval(
    alg: &Algebra,
    spec: &BibracketSpec,
    a: &[Letter],
    b: &[Letter],
) -> Result<Vec<Triple>, BracketError> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let d = spec.degree_d();
    if a.len() > 1 {
        // split the first argument: a = a₀ · rest
        let (head, rest) = (a[0], &a[1..]);
        let mut out = Vec::new();
        // a₀ ∗ ⟨⟨rest, b⟩⟩: the inner left action twists past the left leg
        for (c, z0, z1) in eval(alg, spec, rest, b)? {
            if let Some(l1) = prepend(alg, head, &z1) {
                let s = sign_pow(alg.degree(head.gen) * z0.degree(alg));
                out.push((c * s, z0, l1));
            }
        }
        // (−1)^{|rest|(|b|+d)} ⟨⟨a₀, b⟩⟩ ∗ rest
        let outer_sign = sign_pow(deg_of(alg, rest) * (deg_of(alg, b) + d));
        for (c, z0, z1) in eval(alg, spec, &a[..1], b)? {
            if let Some(l0) = append(alg, &z0, rest) {
                let s = sign_pow(deg_of(alg, rest) * z1.degree(alg));
                out.push((c * s * outer_sign.clone(), l0, z1));
            }
        }
        return Ok(out);
    }
    if b.len() > 1 {
        // split the second argument: b = b₀ · rest
        let (head, rest) = (&b[..1], &b[1..]);
        let mut out = Vec::new();
        for (c, z0, z1) in eval(alg, spec, a, head)? {
            if let Some(l1) = append(alg, &z1, rest) {
                out.push((c, z0, l1));
            }
        }
        let sign = sign_pow((deg_of(alg, a) + d) * deg_of(alg, head));
        for (c, z0, z1) in eval(alg, spec, a, rest)? {
            if let Some(l0) = prepend(alg, b[0], &z0) {
                out.push((c * sign.clone(), l0, z1));
            }
        }
        return Ok(out);
    }
    let (la, lb) = (a[0], b[0]);
    if lb.inv {
        // ⟨⟨a, h⁻¹⟩⟩ = −h⁻¹ ⟨⟨a, h⟩⟩ h⁻¹
        let mut out = Vec::new();
        for (c, z0, z1) in eval(alg, spec, a, &[lb.positive()])? {
            let l0 = prepend(alg, lb, &z0);
            let l1 = append(alg, &z1, &[lb]);
            if let (Some(l0), Some(l1)) = (l0, l1) {
                out.push((-c, l0, l1));
            }
        }
        return Ok(out);
    }
    if la.inv {
        // ⟨⟨x⁻¹, b⟩⟩ = −x⁻¹ ∗ ⟨⟨x, b⟩⟩ ∗ x⁻¹, all degrees involved being 0
        let mut out = Vec::new();
        for (c, z0, z1) in eval(alg, spec, &[la.positive()], b)? {
            let l0 = append(alg, &z0, &[la]);
            let l1 = prepend(alg, la, &z1);
            if let (Some(l0), Some(l1)) = (l0, l1) {
                out.push((-c, l0, l1));
            }
        }
        return Ok(out);
    }
    match spec.value(la.gen, lb.gen) {
        Some(v) => Ok(v
            .terms()
            .map(|(legs, c)| (c.clone(), legs[0].clone(), legs[1].clone()))
            .collect()),
        None => Err(BracketError::MissingTableEntry {
            a: alg.decl(la.gen).name.clone(),
            b: alg.decl(lb.gen).name.clone(),
        }),
    }
}

pub fn naive_eval(
    alg: &Algebra,
    spec: &BibracketSpec,
    a: &Word,
    b: &Word,
) -> Result<TensorPoly, BracketError> {
    if a.is_unit() || b.is_unit() {
        return Ok(TensorPoly::zero(2));
    }
    let mut out = TensorPoly::zero(2);
    for (c, z0, z1) in eval(alg, spec, a.letters(), b.letters())? {
        out.add_term(vec![z0, z1], c);
    }
    Ok(out)
}

pub fn naive_eval_poly(
    alg: &Algebra,
    spec: &BibracketSpec,
    a: &NCPoly,
    b: &NCPoly,
) -> Result<TensorPoly, BracketError> {
    let mut out = TensorPoly::zero(2);
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            let v = naive_eval(alg, spec, wa, wb)?;
            out = out.add(&v.scale(&(ca.clone() * cb.clone())));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::single_object;
    use crate::bracket::{random_antisymmetric_spec, Evaluator};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn agrees_with_production_on_fixtures() {
        let laurent = {
            let (alg, _) = single_object(&[("x", 0, true), ("y", 1, false)]);
            let spec = BibracketSpec::from_exprs(
                &alg,
                -1,
                &[
                    ("x", "x", "0"),
                    ("x", "y", "(-1) * x (x) 1"),
                    ("y", "x", "1 (x) x"),
                    ("y", "y", "1 (x) y - y (x) 1"),
                ],
            )
            .unwrap();
            (alg, spec)
        };
        let sphere = {
            let (alg, _) = single_object(&[("x", 1, false), ("y", 2, false)]);
            let spec = BibracketSpec::from_exprs(
                &alg,
                -3,
                &[
                    ("x", "x", "0"),
                    ("x", "y", "1 (x) 1"),
                    ("y", "x", "(-1) * 1 (x) 1"),
                    ("y", "y", "0"),
                ],
            )
            .unwrap();
            (alg, spec)
        };
        for (alg, spec) in [laurent, sphere] {
            let ev = Evaluator::new(&alg, &spec);
            let words = alg.words_up_to(3);
            for a in &words {
                for b in &words {
                    assert_eq!(
                        naive_eval(&alg, &spec, a, b).unwrap(),
                        ev.eval_words(a, b).unwrap(),
                        "disagreement at ({}, {})",
                        a.display(&alg),
                        b.display(&alg)
                    );
                }
            }
        }
    }

    #[test]
    fn agrees_on_random_tables() {
        let (alg, _) = single_object(&[("u", 1, false), ("v", 2, false)]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for d in [-1i64, 0, 2] {
            let spec = random_antisymmetric_spec(&alg, d, &mut rng).unwrap();
            let ev = Evaluator::new(&alg, &spec);
            let words = alg.words_up_to(2);
            for a in &words {
                for b in &words {
                    assert_eq!(
                        naive_eval(&alg, &spec, a, b).unwrap(),
                        ev.eval_words(a, b).unwrap()
                    );
                }
            }
        }
    }
}
