//! The braid group action on l-tuples of factored rational functions.
//!
//! Generator T_j multiplies every component i ≠ j by shifted copies of the
//! j-th component, one pattern per Cartan entry a_ij, and replaces the j-th
//! component by 1/P_j(u − d_j). Words act by right-to-left composition.

use crate::lie::LieDatum;
use crate::rational::{rat, Rat};
use crate::ratfun::{FactoredRational, RationalTuple};
use crate::weyl::WeylWord;
use crate::{Error, Result};

/// T_j applied to one tuple.
pub fn apply_generator(datum: &LieDatum, j: usize, p: &RationalTuple) -> Result<RationalTuple> {
    datum.check_node(j)?;
    if p.lie_type() != datum.lie_type() {
        return Err(Error::DatumMismatch {
            left: p.lie_type().to_string(),
            right: datum.lie_type().to_string(),
        });
    }
    let pj = p.component(j).clone();
    let mut out = p.clone();
    for i in 1..=datum.rank() {
        if i == j {
            continue;
        }
        let multiplier = match datum.a(i, j) {
            0 => continue,
            // P_j(u - c) has every root shifted by +c
            -1 => pj.shift_argument(Rat::new(datum.d(i), 2)),
            -2 => pj.shift_argument(rat(1, 1)).mul(&pj),
            -3 => pj
                .shift_argument(rat(3, 2))
                .mul(&pj.shift_argument(rat(1, 2)))
                .mul(&pj.shift_argument(rat(-1, 2))),
            other => unreachable!("Cartan entry {other} out of range"),
        };
        out.set_component(i, p.component(i).mul(&multiplier));
    }
    out.set_component(j, pj.shift_argument(Rat::from_integer(datum.d(j))).inv());
    Ok(out)
}

/// T_w(P) = T_{r_1}(T_{r_2}(...T_{r_p}(P))): strictly right-to-left.
pub fn apply_word(datum: &LieDatum, word: &WeylWord, p: &RationalTuple) -> Result<RationalTuple> {
    let mut cur = p.clone();
    for &r in word.letters().iter().rev() {
        cur = apply_generator(datum, r, &cur)?;
    }
    Ok(cur)
}

/// The two sides of the braid relation for the pair (i, j), as letter
/// sequences: m alternating letters starting with i, and with j.
pub fn relation_words(datum: &LieDatum, i: usize, j: usize) -> (Vec<usize>, Vec<usize>) {
    let m = datum.coxeter_order(i, j);
    let left = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
    let right = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
    (left, right)
}

/// Evaluate both sides of the braid relation determined by a_ij·a_ji on `p`.
pub fn check_braid_relation(
    datum: &LieDatum,
    i: usize,
    j: usize,
    p: &RationalTuple,
) -> Result<bool> {
    datum.check_node(i)?;
    datum.check_node(j)?;
    let (left, right) = relation_words(datum, i, j);
    let wl = WeylWord::new(datum, left)?;
    let wr = WeylWord::new(datum, right)?;
    Ok(apply_word(datum, &wl, p)? == apply_word(datum, &wr, p)?)
}

/// True iff T_j(p·q) = T_j(p)·T_j(q).
pub fn check_automorphism(
    datum: &LieDatum,
    j: usize,
    p: &RationalTuple,
    q: &RationalTuple,
) -> Result<bool> {
    let lhs = apply_generator(datum, j, &p.multiply(q)?)?;
    let rhs = apply_generator(datum, j, p)?.multiply(&apply_generator(datum, j, q)?)?;
    Ok(lhs == rhs)
}

/// The single-factor image listed case by case: the i-component of
/// T_j(π_{j,a}) for each off-diagonal Cartan entry.
pub fn single_factor_component(
    datum: &LieDatum,
    i: usize,
    j: usize,
    a: &crate::ratfun::SymbolicPoint,
) -> Result<FactoredRational> {
    use crate::ratfun::SymbolicPoint;
    let mk = |shift: Rat| -> SymbolicPoint { a.shift(shift) };
    Ok(match datum.a(i, j) {
        0 => FactoredRational::one(),
        -1 => FactoredRational::single(mk(Rat::new(datum.d(i), 2)), 1)?,
        -2 => FactoredRational::from_factors([(mk(rat(1, 1)), 1), (mk(rat(0, 1)), 1)]),
        -3 => FactoredRational::from_factors([
            (mk(rat(3, 2)), 1),
            (mk(rat(1, 2)), 1),
            (mk(rat(-1, 2)), 1),
        ]),
        other => unreachable!("Cartan entry {other} out of range"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{make_lie_datum, Family, LieType};
    use crate::rational::{int, GaussRat};
    use crate::ratfun::{fundamental_tuple, random_tuple, SymbolicPoint};
    use rand::SeedableRng;

    fn datum(family: Family, rank: usize) -> LieDatum {
        make_lie_datum(LieType::new(family, rank).unwrap()).unwrap()
    }

    fn pi(datum: &LieDatum, i: usize, a: SymbolicPoint) -> RationalTuple {
        fundamental_tuple(datum, i, a).unwrap()
    }

    #[test]
    fn generator_fixes_other_fundamentals() {
        for (family, rank) in [(Family::A, 3), (Family::G2, 2), (Family::F4, 4)] {
            let d = datum(family, rank);
            for m in 1..=rank {
                for i in 1..=rank {
                    if i == m {
                        continue;
                    }
                    let p = pi(&d, i, SymbolicPoint::parameter("a"));
                    assert_eq!(apply_generator(&d, m, &p).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn a1_diagonal_rule() {
        let d = datum(Family::A, 1);
        let p = pi(&d, 1, SymbolicPoint::parameter("a"));
        let out = apply_generator(&d, 1, &p).unwrap();
        let expected_root =
            SymbolicPoint::affine(Some("a"), int(1), GaussRat::from_int(1)).unwrap();
        assert_eq!(out.component(1).multiplicity(&expected_root), -1);
        assert_eq!(out.component(1).num_roots(), 1);
    }

    #[test]
    fn g2_t2_of_pi2() {
        // T_2(π_{2,a}) = π_{1,a+3/2}·π_{2,a+1}^{-1}
        let d = datum(Family::G2, 2);
        let a = SymbolicPoint::parameter("a");
        let out = apply_generator(&d, 2, &pi(&d, 2, a.clone())).unwrap();
        assert_eq!(out.component(1).multiplicity(&a.shift(crate::rational::rat(3, 2))), 1);
        assert_eq!(out.component(1).num_roots(), 1);
        assert_eq!(out.component(2).multiplicity(&a.shift(int(1))), -1);
        assert_eq!(out.component(2).num_roots(), 1);
    }

    #[test]
    fn g2_t1_of_pi1() {
        // T_1(π_{1,a}) = π_{1,a+3}^{-1}·π_{2,a+3/2}·π_{2,a+1/2}·π_{2,a-1/2}
        let d = datum(Family::G2, 2);
        let a = SymbolicPoint::parameter("a");
        let w = WeylWord::new(&d, vec![1]).unwrap();
        let out = apply_word(&d, &w, &pi(&d, 1, a.clone())).unwrap();
        assert_eq!(out.component(1).multiplicity(&a.shift(int(3))), -1);
        for num in [3i64, 1, -1] {
            assert_eq!(
                out.component(2).multiplicity(&a.shift(crate::rational::rat(num, 2))),
                1,
                "missing shift {num}/2"
            );
        }
        assert_eq!(out.component(2).num_roots(), 3);
    }

    #[test]
    fn empty_word_is_identity() {
        let d = datum(Family::A, 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let p = random_tuple(&mut rng, &d, 4);
        let w = WeylWord::new(&d, vec![]).unwrap();
        assert_eq!(apply_word(&d, &w, &p).unwrap(), p);

        let w = WeylWord::new(&d, vec![2]).unwrap();
        let f = pi(&d, 1, SymbolicPoint::parameter("a"));
        assert_eq!(apply_word(&d, &w, &f).unwrap(), f);
    }

    #[test]
    fn braid_relations_on_random_tuples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for (family, rank) in [
            (Family::A, 2),
            (Family::B, 2),
            (Family::C, 2),
            (Family::G2, 2),
            (Family::F4, 4),
        ] {
            let d = datum(family, rank);
            for _ in 0..50 {
                let p = random_tuple(&mut rng, &d, 3);
                for i in 1..=rank {
                    for j in (i + 1)..=rank {
                        assert!(
                            check_braid_relation(&d, i, j, &p).unwrap(),
                            "{family}{rank} pair ({i},{j}) failed on {p:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn automorphism_on_random_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for (family, rank) in [(Family::A, 3), (Family::C, 3), (Family::G2, 2)] {
            let d = datum(family, rank);
            for _ in 0..50 {
                let p = random_tuple(&mut rng, &d, 3);
                let q = random_tuple(&mut rng, &d, 3);
                for j in 1..=rank {
                    assert!(check_automorphism(&d, j, &p, &q).unwrap());
                }
            }
        }
    }

    #[test]
    fn word_application_is_braid_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let d = datum(Family::B, 3);
        let w0 = crate::weyl::longest_word(&d).unwrap();
        let words = crate::weyl::braid_equivalent_words(&d, &w0, 8).unwrap();
        let p = random_tuple(&mut rng, &d, 2);
        let reference = apply_word(&d, &w0, &p).unwrap();
        for letters in words {
            let w = WeylWord::new(&d, letters).unwrap();
            assert_eq!(apply_word(&d, &w, &p).unwrap(), reference);
        }
    }
}
