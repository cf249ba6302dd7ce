//! The commutator subspace [A,A] and cyclic classes of words.
//!
//! [A,A] is spanned by uv − (−1)^{|u||v|}vu over pairs of words. Two facts
//! drive the algorithms here. A word with distinct source and target equals
//! the commutator [w, e_target] outright, because e_target·w is not
//! composable. A loop word, split as u·v, satisfies uv ≡ (−1)^{|u||v|}vu
//! modulo [A,A], so its class is determined by its signed rotation orbit,
//! with cancellation at the junction allowed to shorten the word. When the
//! orbit identifies a word with its own negative, the class is 2-torsion,
//! which over ℚ means it vanishes, with an explicit decomposition at
//! half-integer coefficients.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, Word};
use crate::ncpoly::NCPoly;
use crate::scalar::{int, ratio, sign_pow, Scalar, Zero};

/// One summand c·[u,v] of a commutator decomposition.
pub type CommTerm = (Scalar, Word, Word);

enum OrbitOutcome {
    /// w = sign·canon + Σ chain, canon the minimal word in the orbit.
    Class {
        canon: Word,
        sign: Scalar,
        chain: Vec<CommTerm>,
    },
    /// w ≡ −w in the orbit, so w = Σ chain exactly.
    Torsion { chain: Vec<CommTerm> },
}

/// Explores the signed rotation orbit of a loop word, recording for every
/// reached word an exact commutator chain back to `w`.
fn rotation_orbit(alg: &Algebra, w: &Word) -> OrbitOutcome {
    let mut visited: BTreeMap<Word, (Scalar, Vec<CommTerm>)> = BTreeMap::new();
    visited.insert(w.clone(), (int(1), Vec::new()));
    let mut queue = vec![w.clone()];
    while let Some(m) = queue.pop() {
        if m.is_unit() {
            continue;
        }
        let (sign_m, chain_m) = visited.get(&m).expect("queued words are visited").clone();
        let u = Word::from_letters(alg, vec![m.letters()[0]]).expect("single letter");
        let v = if m.len() == 1 {
            Word::unit(u.target(alg))
        } else {
            Word::from_letters(alg, m.letters()[1..].to_vec()).expect("suffix of a word")
        };
        // m = uv = (−1)^{|u||v|} vu + [u,v]
        let rotated = v.mul(&u, alg).expect("rotation of a loop is composable");
        let step_sign = sign_pow(u.degree(alg) * v.degree(alg));
        let new_sign = sign_m.clone() * step_sign;
        let mut new_chain = chain_m;
        new_chain.push((sign_m, u, v));
        match visited.get(&rotated) {
            None => {
                visited.insert(rotated.clone(), (new_sign, new_chain));
                queue.push(rotated);
            }
            Some((old_sign, old_chain)) => {
                if *old_sign != new_sign {
                    // w = old_sign·r + C_old and w = −old_sign·r + C_new,
                    // so w = (C_old + C_new)/2
                    let mut chain: Vec<CommTerm> = Vec::new();
                    for (c, a, b) in old_chain.iter().chain(new_chain.iter()) {
                        chain.push((c.clone() * ratio(1, 2), a.clone(), b.clone()));
                    }
                    return OrbitOutcome::Torsion { chain };
                }
            }
        }
    }
    let (canon, (sign, chain)) = visited
        .iter()
        .min_by(|a, b| a.0.cmp(b.0))
        .map(|(k, v)| (k.clone(), v.clone()))
        .expect("orbit contains at least w");
    // w = sign·canon + chain
    OrbitOutcome::Class { canon, sign, chain }
}

/// The class of `p` in A/[A,A]: a signed sum of canonical loop words.
/// Non-loop words map to zero.
pub fn cyclic_class(alg: &Algebra, p: &NCPoly) -> BTreeMap<Word, Scalar> {
    let mut out: BTreeMap<Word, Scalar> = BTreeMap::new();
    for (w, c) in p.terms() {
        if w.source() != w.target(alg) {
            continue;
        }
        if let OrbitOutcome::Class { canon, sign, .. } = rotation_orbit(alg, w) {
            let entry = out.entry(canon).or_insert_with(Scalar::zero);
            *entry += sign * c.clone();
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Writes `p` as an explicit sum Σ cᵢ[uᵢ,vᵢ] of graded commutators of
/// words, or returns None when p ∉ [A,A]. The returned decomposition
/// reassembles to `p` exactly under `NCPoly::commutator`.
pub fn commutator_decomposition(alg: &Algebra, p: &NCPoly) -> Option<Vec<CommTerm>> {
    let mut chain: Vec<CommTerm> = Vec::new();
    let mut classes: BTreeMap<Word, Scalar> = BTreeMap::new();
    for (w, c) in p.terms() {
        if w.source() != w.target(alg) {
            // w·e_t = w while e_t·w = 0, so w = [w, e_t]
            chain.push((c.clone(), w.clone(), Word::unit(w.target(alg))));
            continue;
        }
        match rotation_orbit(alg, w) {
            OrbitOutcome::Torsion { chain: tchain } => {
                for (tc, u, v) in tchain {
                    chain.push((tc * c.clone(), u, v));
                }
            }
            OrbitOutcome::Class { canon, sign, chain: wchain } => {
                for (wc, u, v) in wchain {
                    chain.push((wc * c.clone(), u, v));
                }
                let entry = classes.entry(canon).or_insert_with(Scalar::zero);
                *entry += sign * c.clone();
            }
        }
    }
    if classes.values().any(|c| !c.is_zero()) {
        return None;
    }
    chain.retain(|(c, _, _)| !c.is_zero());
    Some(chain)
}

pub fn in_commutator_subspace(alg: &Algebra, p: &NCPoly) -> bool {
    commutator_decomposition(alg, p).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{single_object, GeneratorDecl};
    use crate::scalar::One;

    fn rebuild(alg: &Algebra, chain: &[CommTerm]) -> NCPoly {
        let mut out = NCPoly::zero();
        for (c, u, v) in chain {
            out = out.add(
                &NCPoly::commutator(
                    &NCPoly::from_term(u.clone(), int(1)),
                    &NCPoly::from_term(v.clone(), int(1)),
                    alg,
                )
                .scale(c),
            );
        }
        out
    }

    fn decompose_and_rebuild(alg: &Algebra, p: &NCPoly) -> Option<NCPoly> {
        commutator_decomposition(alg, p).map(|chain| rebuild(alg, &chain))
    }

    #[test]
    fn non_loop_words_are_commutators() {
        let mut alg = Algebra::new();
        let p = alg.object("P");
        let q = alg.object("Q");
        let f = alg
            .add_generator(GeneratorDecl {
                name: "f".into(),
                degree: 1,
                source: p,
                target: q,
                invertible: false,
            })
            .unwrap();
        let fp = NCPoly::gen(&alg, f);
        assert_eq!(decompose_and_rebuild(&alg, &fp), Some(fp));
    }

    #[test]
    fn literal_commutators_decompose() {
        let (alg, ids) = single_object(&[("x", 0, false), ("y", 1, false), ("z", 2, false)]);
        let polys: Vec<NCPoly> = ids.iter().map(|&g| NCPoly::gen(&alg, g)).collect();
        for a in &polys {
            for b in &polys {
                let ab = a.mul(b, &alg);
                let comm = NCPoly::commutator(&ab, &polys[2], &alg);
                assert_eq!(decompose_and_rebuild(&alg, &comm), Some(comm));
            }
        }
    }

    #[test]
    fn nonzero_classes_are_rejected() {
        let (alg, ids) = single_object(&[("x", 0, false), ("y", 1, false)]);
        let x = NCPoly::gen(&alg, ids[0]);
        let y = NCPoly::gen(&alg, ids[1]);
        assert!(commutator_decomposition(&alg, &y).is_none());
        // yx − xy = [y,x] since |x| = 0, while yx + xy has class 2·xy
        let yx = y.mul(&x, &alg);
        let xy = x.mul(&y, &alg);
        assert!(in_commutator_subspace(&alg, &yx.sub(&xy)));
        assert!(!in_commutator_subspace(&alg, &yx.add(&xy)));
    }

    #[test]
    fn odd_squares_are_torsion() {
        let (alg, ids) = single_object(&[("y", 1, false)]);
        let y = NCPoly::gen(&alg, ids[0]);
        let yy = y.mul(&y, &alg);
        // y² ~ −y² under rotation, so y² = ½[y,y] over ℚ
        let chain = commutator_decomposition(&alg, &yy).unwrap();
        assert_eq!(rebuild(&alg, &chain), yy);
        assert_eq!(chain.len(), 1);
        assert_eq!(chain[0].0, ratio(1, 2));
    }

    #[test]
    fn junction_cancellation_shrinks_the_orbit() {
        let (alg, ids) = single_object(&[("x", 0, true), ("y", 3, false)]);
        let x = NCPoly::gen(&alg, ids[0]);
        let xi = NCPoly::gen_inv(&alg, ids[0]);
        let y = NCPoly::gen(&alg, ids[1]);
        // x⁻¹yx rotates to y, so x⁻¹yx − y ∈ [A,A] but x⁻¹yx + y is not
        let conj = xi.mul(&y, &alg).mul(&x, &alg);
        let diff = conj.sub(&y);
        assert_eq!(decompose_and_rebuild(&alg, &diff), Some(diff));
        assert!(!in_commutator_subspace(&alg, &conj.add(&y)));
    }

    #[test]
    fn cyclic_class_is_rotation_invariant() {
        let (alg, ids) = single_object(&[("u", 1, false), ("v", 2, false)]);
        let u = NCPoly::gen(&alg, ids[0]);
        let v = NCPoly::gen(&alg, ids[1]);
        let uv = u.mul(&v, &alg);
        let vu = v.mul(&u, &alg);
        // uv ≡ (−1)^{1·2} vu
        assert_eq!(cyclic_class(&alg, &uv), cyclic_class(&alg, &vu));
        let c = cyclic_class(&alg, &uv);
        assert_eq!(c.len(), 1);
        assert!(c.values().next().unwrap().is_one() || (-c.values().next().unwrap().clone()).is_one());
        // commutators have zero class
        let comm = NCPoly::commutator(&u, &v.mul(&v, &alg), &alg);
        assert!(cyclic_class(&alg, &comm).is_empty());
    }
}
