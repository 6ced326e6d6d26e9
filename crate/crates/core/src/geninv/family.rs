//! The full inner-inverse family of a matrix, parameterized through its
//! rank normal form: with P a Q = diag(I_r, 0), every inner inverse is
//! exactly Q * [[I_r, X], [Y, Z]] * P for free blocks X, Y, Z.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{RankForm, StarMatrix};
use crate::scalar::{FieldSpec, Scalar};

pub struct InnerInverseFamily {
    a: StarMatrix,
    rf: RankForm,
}

impl InnerInverseFamily {
    pub fn new(a: &StarMatrix) -> InnerInverseFamily {
        InnerInverseFamily {
            a: a.clone(),
            rf: a.rank_form(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rf.r
    }

    /// Number of free scalar parameters: n^2 - r^2.
    pub fn free_count(&self) -> usize {
        let n = self.a.dim();
        n * n - self.rf.r * self.rf.r
    }

    /// The canonical member, all free blocks zero.
    pub fn canonical(&self) -> StarMatrix {
        self.instantiate(&vec![
            Scalar::zero(self.a.field());
            self.free_count()
        ])
    }

    /// Q * [[I_r, X], [Y, Z]] * P with the free entries taken row-major
    /// from `free` (positions outside the leading I_r block).
    pub fn instantiate(&self, free: &[Scalar]) -> StarMatrix {
        assert_eq!(free.len(), self.free_count());
        let n = self.a.dim();
        let r = self.rf.r;
        let field = self.a.field();
        let mut it = free.iter();
        let m = StarMatrix::from_fn(field, n, |i, j| {
            if i < r && j < r {
                Scalar::from_i64(field, i64::from(i == j))
            } else {
                it.next().expect("free entry").clone()
            }
        });
        let g = self.rf.q.mul(&m).unwrap().mul(&self.rf.p).unwrap();
        debug_assert_eq!(self.a.mul(&g).unwrap().mul(&self.a).unwrap(), self.a);
        g
    }

    /// Membership test: g is an inner inverse of a iff Q^{-1} g P^{-1} has
    /// the exact I_r leading block.
    pub fn contains(&self, g: &StarMatrix) -> bool {
        if g.field() != self.a.field() || g.dim() != self.a.dim() {
            return false;
        }
        let m = self.rf.q_inv.mul(g).unwrap().mul(&self.rf.p_inv).unwrap();
        let r = self.rf.r;
        (0..r).all(|i| {
            (0..r).all(|j| {
                let want = Scalar::from_i64(self.a.field(), i64::from(i == j));
                *m.get(i, j) == want
            })
        })
    }

    /// Deterministic sample: free entries drawn from a small scalar pool
    /// over Q/Qi, uniformly over all of F_p.
    pub fn sample(&self, seed: u64) -> StarMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let free: Vec<Scalar> = (0..self.free_count())
            .map(|_| random_pool_scalar(self.a.field(), &mut rng))
            .collect();
        self.instantiate(&free)
    }

    /// Every member, for finite fields only. The family has
    /// p^(n^2 - r^2) elements.
    pub fn enumerate(&self) -> Vec<StarMatrix> {
        let FieldSpec::Fp(p) = self.a.field() else {
            panic!("enumerate requires a finite field");
        };
        let count = self.free_count();
        let total = (p as usize).checked_pow(count as u32).expect("family size");
        (0..total)
            .map(|mut idx| {
                let free: Vec<Scalar> = (0..count)
                    .map(|_| {
                        let digit = (idx % p as usize) as i64;
                        idx /= p as usize;
                        Scalar::from_i64(self.a.field(), digit)
                    })
                    .collect();
                self.instantiate(&free)
            })
            .collect()
    }
}

/// Draw a scalar from a fixed small pool (Q, Qi) or uniformly (Fp).
pub fn random_pool_scalar(field: FieldSpec, rng: &mut impl Rng) -> Scalar {
    const POOL: &[(i64, i64)] = &[
        (0, 1),
        (1, 1),
        (-1, 1),
        (2, 1),
        (-2, 1),
        (3, 1),
        (1, 2),
        (-1, 2),
        (1, 3),
        (2, 3),
        (-2, 3),
    ];
    match field {
        FieldSpec::Q => {
            let (n, d) = POOL[rng.gen_range(0..POOL.len())];
            Scalar::from_ratio(field, n, d)
        }
        FieldSpec::Qi => {
            let (rn, rd) = POOL[rng.gen_range(0..POOL.len())];
            let (in_, id) = POOL[rng.gen_range(0..POOL.len())];
            let re = match Scalar::from_ratio(FieldSpec::Q, rn, rd) {
                Scalar::Q(r) => r,
                _ => unreachable!(),
            };
            let im = match Scalar::from_ratio(FieldSpec::Q, in_, id) {
                Scalar::Q(r) => r,
                _ => unreachable!(),
            };
            Scalar::gaussian(re, im)
        }
        FieldSpec::Fp(p) => Scalar::from_i64(field, rng.gen_range(0..p) as i64),
    }
}
