//! Structured random generators: rank-controlled matrices, star-symmetric
//! seeds, and premise-satisfying pairs for the relational theorems.
//!
//! Premise pairs are built as polynomials in a star-symmetric element (or
//! by conjugating with a signed permutation), which makes the bilateral
//! premise equations hold identically; rejection sampling would
//! essentially never hit them.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geninv::{core_inverse, random_pool_scalar};
use crate::matrix::StarMatrix;
use crate::scalar::{FieldSpec, Scalar};

/// Deterministic per-trial RNG derived from (root seed, trial index).
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    // splitmix-style mix so nearby indices decorrelate
    let mut z = seed
        .wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x243F_6A88_85A3_08D3);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

pub fn random_matrix(field: FieldSpec, n: usize, rng: &mut impl Rng) -> StarMatrix {
    let entries = (0..n * n).map(|_| random_pool_scalar(field, rng)).collect();
    StarMatrix::new(field, n, entries).expect("random entries")
}

/// Random invertible matrix: unit lower * unit upper * permutation.
pub fn random_invertible(field: FieldSpec, n: usize, rng: &mut impl Rng) -> StarMatrix {
    let lower = StarMatrix::from_fn(field, n, |i, j| {
        if i == j {
            Scalar::one(field)
        } else if i > j {
            random_pool_scalar(field, rng)
        } else {
            Scalar::zero(field)
        }
    });
    let upper = StarMatrix::from_fn(field, n, |i, j| {
        if i == j {
            Scalar::one(field)
        } else if i < j {
            random_pool_scalar(field, rng)
        } else {
            Scalar::zero(field)
        }
    });
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let p = StarMatrix::from_fn(field, n, |i, j| {
        Scalar::from_i64(field, i64::from(perm[i] == j))
    });
    lower.mul(&upper).unwrap().mul(&p).unwrap()
}

/// Random matrix of exact rank r, as L * diag(I_r, 0) * R with invertible
/// seeded L, R. The rank is re-verified before returning.
pub fn gen_with_rank(field: FieldSpec, n: usize, r: usize, seed: u64) -> StarMatrix {
    assert!(r <= n);
    let mut rng = trial_rng(seed, 0x7261_6e6b);
    let d = StarMatrix::from_fn(field, n, |i, j| {
        Scalar::from_i64(field, i64::from(i == j && i < r))
    });
    let l = random_invertible(field, n, &mut rng);
    let rt = random_invertible(field, n, &mut rng);
    let a = l.mul(&d).unwrap().mul(&rt).unwrap();
    debug_assert_eq!(a.rank(), r);
    a
}

/// Seeded element of the right null space {H : A H = 0}.
pub fn random_null_space_element(a: &StarMatrix, seed: u64) -> StarMatrix {
    let mut rng = trial_rng(seed, 0x6e75_6c6c);
    let rf = a.rank_form();
    let n = a.dim();
    let field = a.field();
    // A (Q Y) = P^-1 D Y: rows < r of Y must vanish, the rest are free
    let y = StarMatrix::from_fn(field, n, |i, _| {
        if i < rf.r {
            Scalar::zero(field)
        } else {
            random_pool_scalar(field, &mut rng)
        }
    });
    let h = rf.q.mul(&y).unwrap();
    debug_assert!(a.mul(&h).unwrap().is_zero());
    h
}

/// Random star-symmetric element: symmetric over Q/Fp, Hermitian over Qi.
pub fn random_star_symmetric(field: FieldSpec, n: usize, rng: &mut impl Rng) -> StarMatrix {
    let mut m = vec![vec![Scalar::zero(field); n]; n];
    #[allow(clippy::needless_range_loop)] // symmetric double index; iterators obscure it
    for i in 0..n {
        for j in i..n {
            let v = if i == j && field == FieldSpec::Qi {
                // Hermitian diagonal entries are real
                match random_pool_scalar(FieldSpec::Q, rng) {
                    Scalar::Q(r) => Scalar::gaussian(r, num::Zero::zero()),
                    _ => unreachable!(),
                }
            } else {
                random_pool_scalar(field, rng)
            };
            m[j][i] = v.conj();
            m[i][j] = v;
        }
    }
    let s = StarMatrix::from_fn(field, n, |i, j| m[i][j].clone());
    debug_assert_eq!(s.star(), s);
    s
}

/// Evaluate a random polynomial of degree <= 3 (nonzero linear part is
/// biased in) at `s`.
fn random_polynomial_at(s: &StarMatrix, rng: &mut impl Rng) -> StarMatrix {
    let field = s.field();
    let n = s.dim();
    let mut acc = StarMatrix::zero(field, n);
    let mut power = StarMatrix::identity(field, n);
    for deg in 0..=3 {
        let c = if deg == 1 && rng.gen_bool(0.7) {
            Scalar::one(field)
        } else {
            random_pool_scalar(field, rng)
        };
        acc = acc.add(&power.scale(&c).unwrap()).unwrap();
        power = power.mul(s).unwrap();
    }
    acc
}

/// Signed permutation matrix; real entries, so it is unitary over every
/// supported field.
fn signed_permutation(field: FieldSpec, n: usize, rng: &mut impl Rng) -> StarMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let signs: Vec<i64> = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    StarMatrix::from_fn(field, n, |i, j| {
        Scalar::from_i64(field, if perm[i] == j { signs[i] } else { 0 })
    })
}

/// Which relational theorem a premise pair is generated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PremiseTheorem {
    DoubleCommute,
    ReverseOrder,
}

/// Generator gave up: no core-invertible premise pair found within the
/// retry budget.
#[derive(Debug, Clone)]
pub struct GenerationExhausted {
    pub budget: usize,
}

/// A premise-satisfying input: for reverse-order, (a, b) with ab = ba and
/// ab* = b*a; for double-commute, (a, b, x) with xa = bx and xa* = b*x.
/// Both a and b are regenerated until core invertible. The premise
/// equations are verified exactly before returning.
pub fn gen_premise_pair(
    theorem: PremiseTheorem,
    field: FieldSpec,
    n: usize,
    seed: u64,
) -> Result<(StarMatrix, StarMatrix, Option<StarMatrix>), GenerationExhausted> {
    const BUDGET: usize = 400;
    let mut rng = trial_rng(seed, 0x7072_656d);
    for _ in 0..BUDGET {
        let s = random_star_symmetric(field, n, &mut rng);
        let (a, b, x) = match theorem {
            PremiseTheorem::ReverseOrder => {
                let a = random_polynomial_at(&s, &mut rng);
                let b = random_polynomial_at(&s, &mut rng);
                (a, b, None)
            }
            PremiseTheorem::DoubleCommute => {
                let a = random_polynomial_at(&s, &mut rng);
                if rng.gen_bool(0.5) {
                    // cross pair via signed-permutation conjugation
                    let w = signed_permutation(field, n, &mut rng);
                    let w_inv = w.try_inverse().expect("signed permutation is a unit");
                    let b = w.mul(&a).unwrap().mul(&w_inv).unwrap();
                    (a, b, Some(w))
                } else {
                    let x = random_polynomial_at(&a, &mut rng);
                    (a.clone(), a.clone(), Some(x))
                }
            }
        };
        if core_inverse(&a).is_err() || core_inverse(&b).is_err() {
            continue;
        }
        match theorem {
            PremiseTheorem::ReverseOrder => {
                assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                assert_eq!(
                    a.mul(&b.star()).unwrap(),
                    b.star().mul(&a).unwrap()
                );
            }
            PremiseTheorem::DoubleCommute => {
                let x = x.as_ref().unwrap();
                assert_eq!(x.mul(&a).unwrap(), b.mul(x).unwrap());
                assert_eq!(x.mul(&a.star()).unwrap(), b.star().mul(x).unwrap());
            }
        }
        return Ok((a, b, x));
    }
    Err(GenerationExhausted { budget: BUDGET })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_with_rank_profile() {
        for (r, n) in [(0, 2), (1, 2), (2, 2), (1, 3), (3, 3)] {
            let a = gen_with_rank(FieldSpec::Q, n, r, 42 + r as u64);
            assert_eq!(a.rank(), r);
        }
        assert!(gen_with_rank(FieldSpec::Q, 2, 0, 1).is_zero());
    }

    #[test]
    fn premise_pairs_hit_premises() {
        for seed in 0..5 {
            let (a, b, _) =
                gen_premise_pair(PremiseTheorem::ReverseOrder, FieldSpec::Q, 3, seed).unwrap();
            assert!(core_inverse(&a).is_ok());
            assert!(core_inverse(&b).is_ok());
        }
        for seed in 0..5 {
            let (a, b, x) =
                gen_premise_pair(PremiseTheorem::DoubleCommute, FieldSpec::Q, 3, seed).unwrap();
            let x = x.unwrap();
            assert_eq!(x.mul(&a).unwrap(), b.mul(&x).unwrap());
        }
    }

    #[test]
    fn hermitian_seed_over_qi() {
        let mut rng = trial_rng(7, 0);
        let s = random_star_symmetric(FieldSpec::Qi, 3, &mut rng);
        assert_eq!(s.star(), s);
    }

    #[test]
    fn null_space_elements_annihilate() {
        let a = gen_with_rank(FieldSpec::Q, 3, 2, 11);
        for seed in 0..5 {
            let h = random_null_space_element(&a, seed);
            assert!(a.mul(&h).unwrap().is_zero());
        }
    }
}
