//! Square matrices over an exact field, equipped with the *-ring involution
//! star = entry-wise scalar involution composed with transpose.
//!
//! Everything higher up (generalized inverse solvers, theorem checkers, the
//! finite-ring oracle) is built from the operations here: exact ring
//! arithmetic, rank normal form PAQ = diag(I_r, 0), unit tests and
//! canonical linear-system solving.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Which side an equation or one-sided inverse lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An n x n matrix over one of the supported fields. Entries are stored
/// row-major; values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarMatrix {
    field: FieldSpec,
    n: usize,
    entries: Vec<Scalar>,
}

impl StarMatrix {
    pub fn new(field: FieldSpec, n: usize, entries: Vec<Scalar>) -> Result<StarMatrix> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {n}x{n} = {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::FieldMismatch(
                    field.to_string(),
                    e.field().to_string(),
                ));
            }
        }
        Ok(StarMatrix { field, n, entries })
    }

    pub fn from_fn(field: FieldSpec, n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> StarMatrix {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        StarMatrix::new(field, n, entries).expect("from_fn entries")
    }

    pub fn zero(field: FieldSpec, n: usize) -> StarMatrix {
        StarMatrix::from_fn(field, n, |_, _| Scalar::zero(field))
    }

    pub fn identity(field: FieldSpec, n: usize) -> StarMatrix {
        StarMatrix::from_fn(field, n, |i, j| {
            Scalar::from_i64(field, i64::from(i == j))
        })
    }

    /// Convenience constructor from integer literals, mostly for fixtures.
    pub fn from_i64s(field: FieldSpec, rows: &[&[i64]]) -> StarMatrix {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square input required");
        StarMatrix::from_fn(field, n, |i, j| Scalar::from_i64(field, rows[i][j]))
    }

    /// Convenience constructor from scalar tokens, e.g. `"2/3"`, `"1-2i"`.
    pub fn from_tokens(field: FieldSpec, rows: &[&[&str]]) -> Result<StarMatrix> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::InvalidArgument("jagged rows".into()));
            }
            for t in *r {
                entries.push(Scalar::parse(field, t)?);
            }
        }
        StarMatrix::new(field, n, entries)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[i * self.n + j] = v;
    }

    fn compatible(&self, other: &StarMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &StarMatrix) -> Result<StarMatrix> {
        self.compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        StarMatrix::new(self.field, self.n, entries)
    }

    pub fn sub(&self, other: &StarMatrix) -> Result<StarMatrix> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &StarMatrix) -> Result<StarMatrix> {
        self.compatible(other)?;
        let n = self.n;
        let zero = Scalar::zero(self.field);
        let mut out = StarMatrix::zero(self.field, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = zero.clone();
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j))?)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> StarMatrix {
        let entries = self.entries.iter().map(Scalar::neg).collect();
        StarMatrix::new(self.field, self.n, entries).expect("neg")
    }

    pub fn scale(&self, c: &Scalar) -> Result<StarMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.mul(c))
            .collect::<Result<_>>()?;
        StarMatrix::new(self.field, self.n, entries)
    }

    /// The *-ring involution: conjugate transpose over Qi, transpose over
    /// Q and Fp.
    pub fn star(&self) -> StarMatrix {
        StarMatrix::from_fn(self.field, self.n, |i, j| self.get(j, i).conj())
    }

    /// Plain transpose without conjugation. Used to reduce XA = B to a
    /// column-form system; not part of the ring structure.
    pub(crate) fn transpose(&self) -> StarMatrix {
        StarMatrix::from_fn(self.field, self.n, |i, j| self.get(j, i).clone())
    }

    pub fn pow(&self, k: u32) -> StarMatrix {
        let mut acc = StarMatrix::identity(self.field, self.n);
        for _ in 0..k {
            acc = acc.mul(self).expect("pow");
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == StarMatrix::identity(self.field, self.n)
    }

    // elementary row/column operations, used by the rank normal form

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.n {
            self.entries.swap(i * self.n + a, i * self.n + b);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Scalar) {
        for j in 0..self.n {
            let v = self.get(i, j).mul(c).expect("scale_row");
            self.set(i, j, v);
        }
    }

    fn scale_col(&mut self, j: usize, c: &Scalar) {
        for i in 0..self.n {
            let v = self.get(i, j).mul(c).expect("scale_col");
            self.set(i, j, v);
        }
    }

    /// row_i += c * row_k
    fn add_row(&mut self, i: usize, k: usize, c: &Scalar) {
        for j in 0..self.n {
            let v = self
                .get(i, j)
                .add(&self.get(k, j).mul(c).expect("add_row"))
                .expect("add_row");
            self.set(i, j, v);
        }
    }

    /// col_j += c * col_k
    fn add_col(&mut self, j: usize, k: usize, c: &Scalar) {
        for i in 0..self.n {
            let v = self
                .get(i, j)
                .add(&self.get(i, k).mul(c).expect("add_col"))
                .expect("add_col");
            self.set(i, j, v);
        }
    }

    /// Exact rank normal form: invertible P, Q with P * A * Q = diag(I_r, 0).
    /// The returned factorization carries both the transforms and their
    /// inverses, all verified before returning.
    pub fn rank_form(&self) -> RankForm {
        let n = self.n;
        let field = self.field;
        let mut d = self.clone();
        let mut p = StarMatrix::identity(field, n);
        let mut p_inv = StarMatrix::identity(field, n);
        let mut q = StarMatrix::identity(field, n);
        let mut q_inv = StarMatrix::identity(field, n);
        let mut r = 0;
        for k in 0..n {
            let Some((pi, pj)) = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .find(|&(i, j)| !d.get(i, j).is_zero())
            else {
                break;
            };
            if pi != k {
                d.swap_rows(k, pi);
                p.swap_rows(k, pi);
                p_inv.swap_cols(k, pi);
            }
            if pj != k {
                d.swap_cols(k, pj);
                q.swap_cols(k, pj);
                q_inv.swap_rows(k, pj);
            }
            let pivot = d.get(k, k).clone();
            let c = pivot.inv().expect("nonzero pivot");
            d.scale_row(k, &c);
            p.scale_row(k, &c);
            p_inv.scale_col(k, &pivot);
            for i in k + 1..n {
                let f = d.get(i, k).clone();
                if !f.is_zero() {
                    let nf = f.neg();
                    d.add_row(i, k, &nf);
                    p.add_row(i, k, &nf);
                    p_inv.add_col(k, i, &f);
                }
            }
            for j in k + 1..n {
                let f = d.get(k, j).clone();
                if !f.is_zero() {
                    let nf = f.neg();
                    d.add_col(j, k, &nf);
                    q.add_col(j, k, &nf);
                    q_inv.add_row(k, j, &f);
                }
            }
            r += 1;
        }
        let form = RankForm {
            p,
            p_inv,
            q,
            q_inv,
            r,
        };
        form.verify(self);
        form
    }

    pub fn rank(&self) -> usize {
        self.rank_form().r
    }

    /// Two-sided inverse, or `None` when the matrix is not a unit.
    pub fn try_inverse(&self) -> Option<StarMatrix> {
        let rf = self.rank_form();
        if rf.r < self.n {
            return None;
        }
        // PAQ = I so A^{-1} = QP
        Some(rf.q.mul(&rf.p).expect("inverse"))
    }

    /// Witness S with SA = 1 (left) or AS = 1 (right), or `None`. Over a
    /// square matrix ring this coincides with two-sided invertibility, but
    /// the one-sided conditions of the unit criteria are evaluated as
    /// literally stated.
    pub fn one_sided_invertible(&self, side: Side) -> Option<StarMatrix> {
        let id = StarMatrix::identity(self.field, self.n);
        match side {
            Side::Left => self.solve_xa_eq_b(&id),
            Side::Right => self.solve_ax_eq_b(&id),
        }
    }

    /// Canonical solution of A X = B (free variables set to zero), or
    /// `None` when the system has no solution.
    pub fn solve_ax_eq_b(&self, b: &StarMatrix) -> Option<StarMatrix> {
        self.compatible(b).ok()?;
        let rf = self.rank_form();
        // A = P^{-1} D Q^{-1}; AX = B  <=>  D (Q^{-1} X) = P B
        let c = rf.p.mul(b).expect("solve");
        let n = self.n;
        // rows past r of the reduced right-hand side must vanish
        for i in rf.r..n {
            for j in 0..n {
                if !c.get(i, j).is_zero() {
                    return None;
                }
            }
        }
        let y = StarMatrix::from_fn(self.field, n, |i, j| {
            if i < rf.r {
                c.get(i, j).clone()
            } else {
                Scalar::zero(self.field)
            }
        });
        let x = rf.q.mul(&y).expect("solve");
        debug_assert_eq!(self.mul(&x).unwrap(), *b);
        Some(x)
    }

    /// Canonical solution of X A = B, or `None`.
    pub fn solve_xa_eq_b(&self, b: &StarMatrix) -> Option<StarMatrix> {
        self.compatible(b).ok()?;
        // scalars commute, so (XA)^T = A^T X^T
        let x_t = self.transpose().solve_ax_eq_b(&b.transpose())?;
        Some(x_t.transpose())
    }

    /// Parse the matrix file format: `field <spec>`, `<n>`, then n rows of
    /// n whitespace-separated scalar tokens.
    pub fn parse_text(text: &str) -> Result<StarMatrix> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let perr = |line: usize, msg: String| Error::Parse { line: line + 1, msg };
        let (ln, header) = lines
            .next()
            .ok_or_else(|| perr(0, "empty matrix file".into()))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        let field = match toks.as_slice() {
            ["field", "Q"] => FieldSpec::Q,
            ["field", "Qi"] => FieldSpec::Qi,
            ["field", "Fp", p] => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| perr(ln, format!("bad prime: {p}")))?;
                FieldSpec::fp(p).map_err(|e| perr(ln, e.to_string()))?
            }
            _ => return Err(perr(ln, format!("bad field header: {header}"))),
        };
        let (ln, dim_line) = lines
            .next()
            .ok_or_else(|| perr(1, "missing dimension line".into()))?;
        let n: usize = dim_line
            .trim()
            .parse()
            .map_err(|_| perr(ln, format!("bad dimension: {}", dim_line.trim())))?;
        if n == 0 {
            return Err(perr(ln, "dimension must be >= 1".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        let mut rows = 0;
        for (ln, row) in lines {
            let toks: Vec<&str> = row.split_whitespace().collect();
            if toks.len() != n {
                return Err(perr(
                    ln,
                    format!("expected {n} entries in row, got {}", toks.len()),
                ));
            }
            for t in toks {
                let s = Scalar::parse(field, t).map_err(|_| perr(ln, format!("bad scalar token: {t}")))?;
                entries.push(s);
            }
            rows += 1;
        }
        if rows != n {
            return Err(perr(0, format!("expected {n} rows, got {rows}")));
        }
        StarMatrix::new(field, n, entries)
    }
}

impl fmt::Display for StarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            FieldSpec::Q => writeln!(f, "field Q")?,
            FieldSpec::Qi => writeln!(f, "field Qi")?,
            FieldSpec::Fp(p) => writeln!(f, "field Fp {p}")?,
        }
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Invertible P, Q with P * A * Q = diag(I_r, 0).
#[derive(Debug, Clone)]
pub struct RankForm {
    pub p: StarMatrix,
    pub p_inv: StarMatrix,
    pub q: StarMatrix,
    pub q_inv: StarMatrix,
    pub r: usize,
}

impl RankForm {
    /// diag(I_r, 0) in the ambient dimension.
    pub fn diag(&self) -> StarMatrix {
        let field = self.p.field();
        StarMatrix::from_fn(field, self.p.dim(), |i, j| {
            Scalar::from_i64(field, i64::from(i == j && i < self.r))
        })
    }

    fn verify(&self, a: &StarMatrix) {
        let id = StarMatrix::identity(a.field(), a.dim());
        assert_eq!(self.p.mul(&self.p_inv).unwrap(), id, "P P^-1 != I");
        assert_eq!(self.q.mul(&self.q_inv).unwrap(), id, "Q Q^-1 != I");
        let paq = self.p.mul(a).unwrap().mul(&self.q).unwrap();
        assert_eq!(paq, self.diag(), "PAQ != diag(I_r, 0)");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> StarMatrix {
        StarMatrix::from_i64s(FieldSpec::Q, rows)
    }

    #[test]
    fn star_is_transpose_over_q() {
        let a = q(&[&[0, 1], &[0, 0]]);
        assert_eq!(a.star(), q(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn star_is_conjugate_transpose_over_qi() {
        let a = StarMatrix::from_tokens(FieldSpec::Qi, &[&["i", "0"], &["0", "0"]]).unwrap();
        let b = StarMatrix::from_tokens(FieldSpec::Qi, &[&["-i", "0"], &["0", "0"]]).unwrap();
        assert_eq!(a.star(), b);
    }

    #[test]
    fn paper_square_identity() {
        // [[1,-2],[1,-2]]^2 = -A
        let a = q(&[&[1, -2], &[1, -2]]);
        assert_eq!(a.pow(2), a.neg());
    }

    #[test]
    fn rank_form_cases() {
        assert_eq!(StarMatrix::zero(FieldSpec::Q, 2).rank(), 0);
        assert_eq!(StarMatrix::identity(FieldSpec::Q, 3).rank(), 3);
        assert_eq!(q(&[&[1, -2], &[1, -2]]).rank(), 1);
    }

    #[test]
    fn try_inverse_unit() {
        let u = q(&[&[2, 0], &[-2, -2]]);
        let inv = u.try_inverse().unwrap();
        let expect =
            StarMatrix::from_tokens(FieldSpec::Q, &[&["1/2", "0"], &["-1/2", "-1/2"]]).unwrap();
        assert_eq!(inv, expect);
        assert!(u.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn try_inverse_singular() {
        // (1/3)[[4,2],[-8,-4]] from the rank-1 fixture family
        let m = StarMatrix::from_tokens(
            FieldSpec::Q,
            &[&["4/3", "2/3"], &["-8/3", "-4/3"]],
        )
        .unwrap();
        assert!(m.try_inverse().is_none());
        assert!(StarMatrix::identity(FieldSpec::Q, 2).try_inverse().is_some());
    }

    #[test]
    fn one_sided_matches_two_sided() {
        let u = q(&[&[2, 0], &[-2, -2]]);
        let left = u.one_sided_invertible(Side::Left).unwrap();
        assert_eq!(left, u.try_inverse().unwrap());

        let f2 = FieldSpec::fp(2).unwrap();
        let a = StarMatrix::from_i64s(f2, &[&[0, 0], &[1, 1]]);
        assert!(a.one_sided_invertible(Side::Right).is_none());
    }

    #[test]
    fn solve_canonical_zeroes_free_variables() {
        let a = q(&[&[1, 0], &[0, 0]]);
        let x = a.solve_ax_eq_b(&a).unwrap();
        assert_eq!(x, q(&[&[1, 0], &[0, 0]]));

        let z = StarMatrix::zero(FieldSpec::Q, 2);
        let a2 = q(&[&[1, 2], &[3, 4]]);
        assert_eq!(a2.solve_ax_eq_b(&z).unwrap(), z);
    }

    #[test]
    fn solve_unsolvable_over_f2() {
        let f2 = FieldSpec::fp(2).unwrap();
        let a = StarMatrix::from_i64s(f2, &[&[1, 1], &[1, 1]]);
        // a a* a = 0 over F2, so (a a* a) X = a has no solution
        let lhs = a.mul(&a.star()).unwrap().mul(&a).unwrap();
        assert!(lhs.is_zero());
        assert!(lhs.solve_ax_eq_b(&a).is_none());
    }

    #[test]
    fn file_format_round_trip() {
        let text = "field Q\n2\n1 -2\n1 -2\n";
        let a = StarMatrix::parse_text(text).unwrap();
        assert_eq!(a, q(&[&[1, -2], &[1, -2]]));
        assert_eq!(a.to_string(), text);

        let text = "field Fp 3\n2\n2 0\n1 1\n";
        let a = StarMatrix::parse_text(text).unwrap();
        assert_eq!(a.to_string(), text);
    }

    #[test]
    fn file_format_rejections() {
        assert!(StarMatrix::parse_text("field Q\n2\n1 2\n3\n").is_err()); // jagged
        assert!(StarMatrix::parse_text("field Q\n2\n1 2\n").is_err()); // row count
        assert!(StarMatrix::parse_text("field Fp 4\n1\n0\n").is_err()); // non-prime
        assert!(StarMatrix::parse_text("field R\n1\n0\n").is_err()); // unknown field
    }
}
