//! Existence criteria, canonical solvers and unit-based representation
//! formulas for generalized inverses, together with the axiom verifiers
//! that certify every output.
//!
//! Every solver re-verifies the defining equations of its inverse kind
//! before declaring success; representation formulas are never trusted
//! blind. When a formula's units are invertible but the result fails the
//! axioms (possible when the supplied inner inverse is outside the
//! formula's class), the failure surfaces as [`FormulaError::PremiseViolation`].

mod family;
mod formula;
pub mod criteria;

pub use family::{random_pool_scalar, InnerInverseFamily};
pub use formula::{apply_formula, FormulaId, InnerClass};

use std::fmt;

use crate::error::Result;
use crate::matrix::StarMatrix;

/// The seven inverse notions handled by the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InverseKind {
    Inner,
    OneThree,
    OneFour,
    Group,
    MoorePenrose,
    Core,
    DualCore,
}

impl InverseKind {
    pub fn parse(s: &str) -> Option<InverseKind> {
        Some(match s {
            "inner" => InverseKind::Inner,
            "13" => InverseKind::OneThree,
            "14" => InverseKind::OneFour,
            "group" => InverseKind::Group,
            "mp" => InverseKind::MoorePenrose,
            "core" => InverseKind::Core,
            "dualcore" => InverseKind::DualCore,
            _ => return None,
        })
    }
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InverseKind::Inner => "inner",
            InverseKind::OneThree => "13",
            InverseKind::OneFour => "14",
            InverseKind::Group => "group",
            InverseKind::MoorePenrose => "mp",
            InverseKind::Core => "core",
            InverseKind::DualCore => "dualcore",
        };
        f.write_str(s)
    }
}

/// Evaluate the defining equations of `kind` for the candidate `x`.
pub fn axiom_checks(
    kind: InverseKind,
    a: &StarMatrix,
    x: &StarMatrix,
) -> Result<Vec<(&'static str, bool)>> {
    let ax = a.mul(x)?;
    let xa = x.mul(a)?;
    let inner = ("a x a = a", ax.mul(a)? == *a);
    let absorb = ("x a x = x", xa.mul(x)? == *x);
    let sym13 = ("(a x)* = a x", ax.star() == ax);
    let sym14 = ("(x a)* = x a", xa.star() == xa);
    Ok(match kind {
        InverseKind::Inner => vec![inner],
        InverseKind::OneThree => vec![inner, sym13],
        InverseKind::OneFour => vec![inner, sym14],
        InverseKind::Group => vec![inner, absorb, ("a x = x a", ax == xa)],
        InverseKind::MoorePenrose => vec![inner, absorb, sym13, sym14],
        InverseKind::Core => vec![
            inner,
            absorb,
            sym13,
            ("x a^2 = a", xa.mul(a)? == *a),
            ("a x^2 = x", ax.mul(x)? == *x),
        ],
        InverseKind::DualCore => vec![
            inner,
            absorb,
            sym14,
            ("a^2 x = a", a.mul(&ax)? == *a),
            ("x^2 a = x", x.mul(&xa)? == *x),
        ],
    })
}

/// True when every defining equation of `kind` holds for `x`.
pub fn axioms_hold(kind: InverseKind, a: &StarMatrix, x: &StarMatrix) -> bool {
    axiom_checks(kind, a, x)
        .map(|cs| cs.iter().all(|(_, ok)| *ok))
        .unwrap_or(false)
}

/// A computed inverse together with the witnesses used to build it and the
/// outcome of the axiom verification. A certificate is only ever produced
/// with an all-pass axiom check.
#[derive(Debug, Clone)]
pub struct InverseCertificate {
    pub kind: InverseKind,
    pub value: StarMatrix,
    pub witnesses: Vec<(String, StarMatrix)>,
    pub axiom_check: Vec<(&'static str, bool)>,
}

/// The requested inverse does not exist; carries the reason and, for the
/// solvability-based criteria, the residual rank data of the failed system.
#[derive(Debug, Clone)]
pub struct NonExistent {
    pub kind: InverseKind,
    pub reason: String,
}

impl fmt::Display for NonExistent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NonExistent: {}", self.reason)
    }
}

/// Outcome of a unit-based formula evaluation.
#[derive(Debug, Clone)]
pub enum FormulaError {
    /// A named unit of the formula is singular (the criterion predicts
    /// nonexistence).
    NonExistent(NonExistent),
    /// The formula's units were invertible but the premise on the supplied
    /// inner inverse is violated; carries the first failing equation.
    PremiseViolation { equation: String },
}

impl fmt::Display for FormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaError::NonExistent(ne) => ne.fmt(f),
            FormulaError::PremiseViolation { equation } => {
                write!(f, "PremiseViolation: {equation}")
            }
        }
    }
}

fn certify(
    kind: InverseKind,
    a: &StarMatrix,
    value: StarMatrix,
    witnesses: Vec<(String, StarMatrix)>,
) -> std::result::Result<InverseCertificate, String> {
    let checks = axiom_checks(kind, a, &value).map_err(|e| e.to_string())?;
    if let Some((eq, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err((*eq).to_string());
    }
    Ok(InverseCertificate {
        kind,
        value,
        witnesses,
        axiom_check: checks,
    })
}

/// Canonical inner inverse Q * diag(I_r, 0) * P from the rank normal form.
/// Exists for every matrix over a field.
pub fn inner_inverse(a: &StarMatrix) -> InverseCertificate {
    let fam = InnerInverseFamily::new(a);
    let g = fam.canonical();
    certify(InverseKind::Inner, a, g, vec![]).expect("canonical inner inverse")
}

/// Seeded instantiation of the inner-inverse family.
pub fn sample_inner_inverse(a: &StarMatrix, seed: u64) -> StarMatrix {
    InnerInverseFamily::new(a).sample(seed)
}

/// Canonical {1,3}-inverse from the solvability condition a* = a* a x.
pub fn one_three(a: &StarMatrix) -> std::result::Result<InverseCertificate, NonExistent> {
    let lhs = a.star().mul(a).expect("a* a");
    let rhs = a.star();
    match lhs.solve_ax_eq_b(&rhs) {
        Some(x) => Ok(certify(InverseKind::OneThree, a, x, vec![]).expect("{1,3} axioms")),
        None => Err(NonExistent {
            kind: InverseKind::OneThree,
            reason: format!(
                "a* a x = a* unsolvable (rank(a* a) = {}, rank(a*) = {})",
                lhs.rank(),
                rhs.rank()
            ),
        }),
    }
}

/// Canonical {1,4}-inverse from the solvability condition a = a a* x*.
pub fn one_four(a: &StarMatrix) -> std::result::Result<InverseCertificate, NonExistent> {
    let lhs = a.mul(&a.star()).expect("a a*");
    match lhs.solve_ax_eq_b(a) {
        Some(y) => {
            let x = y.star();
            Ok(certify(InverseKind::OneFour, a, x, vec![]).expect("{1,4} axioms"))
        }
        None => Err(NonExistent {
            kind: InverseKind::OneFour,
            reason: format!(
                "a a* y = a unsolvable (rank(a a*) = {}, rank(a) = {})",
                lhs.rank(),
                a.rank()
            ),
        }),
    }
}

/// Group inverse via the solvability criterion a = a^2 x, a = y a^2, with
/// a^# = y a x.
pub fn group_inverse(a: &StarMatrix) -> std::result::Result<InverseCertificate, NonExistent> {
    let a2 = a.pow(2);
    let nonexistent = || NonExistent {
        kind: InverseKind::Group,
        reason: format!(
            "a ∉ R^# (rank(a) = {}, rank(a^2) = {})",
            a.rank(),
            a2.rank()
        ),
    };
    let x = a2.solve_ax_eq_b(a).ok_or_else(nonexistent)?;
    let y = a2.solve_xa_eq_b(a).ok_or_else(nonexistent)?;
    let value = y.mul(a).expect("y a").mul(&x).expect("y a x");
    let cert = certify(
        InverseKind::Group,
        a,
        value,
        vec![("x".into(), x), ("y".into(), y)],
    )
    .expect("group axioms");
    Ok(cert)
}

/// Group inverse through the units u = a^k + 1 - a g and v = a^k + 1 - g a
/// of an inner inverse g, with a^# = u^{-1} a^{2k-1} v^{-1}.
pub fn group_via_units(
    a: &StarMatrix,
    g: &StarMatrix,
    k: u32,
) -> std::result::Result<InverseCertificate, FormulaError> {
    if a.mul(g).unwrap().mul(a).unwrap() != *a {
        return Err(FormulaError::PremiseViolation {
            equation: "a g a = a".into(),
        });
    }
    let id = StarMatrix::identity(a.field(), a.dim());
    let ak = a.pow(k);
    let u = ak.add(&id).unwrap().sub(&a.mul(g).unwrap()).unwrap();
    let v = ak.add(&id).unwrap().sub(&g.mul(a).unwrap()).unwrap();
    let u_inv = u.try_inverse();
    let v_inv = v.try_inverse();
    // u invertible iff v invertible (Jacobson)
    assert_eq!(u_inv.is_some(), v_inv.is_some(), "unit criterion asymmetry");
    let (Some(u_inv), Some(v_inv)) = (u_inv, v_inv) else {
        return Err(FormulaError::NonExistent(NonExistent {
            kind: InverseKind::Group,
            reason: format!("unit a^{k} + 1 - a a^- is singular"),
        }));
    };
    let value = u_inv
        .mul(&a.pow(2 * k - 1))
        .unwrap()
        .mul(&v_inv)
        .unwrap();
    let cert = certify(
        InverseKind::Group,
        a,
        value,
        vec![
            ("u".into(), u),
            ("u^-1".into(), u_inv),
            ("v".into(), v),
            ("v^-1".into(), v_inv),
        ],
    )
    .expect("group axioms from units");
    Ok(cert)
}

/// Moore-Penrose inverse as a^{(1,4)} a a^{(1,3)}.
pub fn mp_inverse(a: &StarMatrix) -> std::result::Result<InverseCertificate, NonExistent> {
    let x14 = one_four(a).map_err(|e| NonExistent {
        kind: InverseKind::MoorePenrose,
        reason: format!("a ∉ R^(1,4): {}", e.reason),
    })?;
    let x13 = one_three(a).map_err(|e| NonExistent {
        kind: InverseKind::MoorePenrose,
        reason: format!("a ∉ R^(1,3): {}", e.reason),
    })?;
    let value = x14
        .value
        .mul(a)
        .expect("x14 a")
        .mul(&x13.value)
        .expect("x14 a x13");
    let cert = certify(
        InverseKind::MoorePenrose,
        a,
        value,
        vec![
            ("a^(1,4)".into(), x14.value),
            ("a^(1,3)".into(), x13.value),
        ],
    )
    .expect("Penrose equations");
    Ok(cert)
}

/// Moore-Penrose inverse via the star-regularity criterion: from
/// a = a a* a x, a† = a* a x^2 a*, cross-checked against the mirrored form
/// a† = a* y^2 a a* built from a = y a a* a.
pub fn mp_via_lemma(a: &StarMatrix) -> std::result::Result<InverseCertificate, NonExistent> {
    let aaa = a.mul(&a.star()).unwrap().mul(a).unwrap();
    let nonexistent = |side: &str| NonExistent {
        kind: InverseKind::MoorePenrose,
        reason: format!(
            "{side} unsolvable (rank(a a* a) = {}, rank(a) = {})",
            aaa.rank(),
            a.rank()
        ),
    };
    let x = aaa
        .solve_ax_eq_b(a)
        .ok_or_else(|| nonexistent("a a* a x = a"))?;
    let y = aaa
        .solve_xa_eq_b(a)
        .ok_or_else(|| nonexistent("y a a* a = a"))?;
    let astar = a.star();
    let x_form = astar
        .mul(a)
        .unwrap()
        .mul(&x.pow(2))
        .unwrap()
        .mul(&astar)
        .unwrap();
    let y_form = astar
        .mul(&y.pow(2))
        .unwrap()
        .mul(a)
        .unwrap()
        .mul(&astar)
        .unwrap();
    assert_eq!(x_form, y_form, "x-form and y-form disagree");
    let cert = certify(
        InverseKind::MoorePenrose,
        a,
        x_form,
        vec![("x".into(), x), ("y".into(), y)],
    )
    .expect("Penrose equations from star regularity");
    Ok(cert)
}

/// Core inverse a^(#) = a^# a a^{(1,3)}; exists iff both parts do.
pub fn core_inverse(a: &StarMatrix) -> std::result::Result<InverseCertificate, NonExistent> {
    let grp = group_inverse(a).map_err(|e| NonExistent {
        kind: InverseKind::Core,
        reason: e.reason,
    })?;
    let x13 = one_three(a).map_err(|e| NonExistent {
        kind: InverseKind::Core,
        reason: format!("a ∉ R^(1,3): {}", e.reason),
    })?;
    let value = grp
        .value
        .mul(a)
        .expect("a# a")
        .mul(&x13.value)
        .expect("a# a a13");
    let cert = certify(
        InverseKind::Core,
        a,
        value,
        vec![("a^#".into(), grp.value), ("a^(1,3)".into(), x13.value)],
    )
    .expect("core five-equation system");
    Ok(cert)
}

/// Dual core inverse a_(#) = a^{(1,4)} a a^#.
pub fn dual_core_inverse(a: &StarMatrix) -> std::result::Result<InverseCertificate, NonExistent> {
    let grp = group_inverse(a).map_err(|e| NonExistent {
        kind: InverseKind::DualCore,
        reason: e.reason,
    })?;
    let x14 = one_four(a).map_err(|e| NonExistent {
        kind: InverseKind::DualCore,
        reason: format!("a ∉ R^(1,4): {}", e.reason),
    })?;
    let value = x14
        .value
        .mul(a)
        .expect("a14 a")
        .mul(&grp.value)
        .expect("a14 a a#");
    let cert = certify(
        InverseKind::DualCore,
        a,
        value,
        vec![("a^(1,4)".into(), x14.value), ("a^#".into(), grp.value)],
    )
    .expect("dual core five-equation system");
    Ok(cert)
}

/// Solve for the requested inverse kind with the canonical solver.
pub fn solve(
    kind: InverseKind,
    a: &StarMatrix,
) -> std::result::Result<InverseCertificate, NonExistent> {
    match kind {
        InverseKind::Inner => Ok(inner_inverse(a)),
        InverseKind::OneThree => one_three(a),
        InverseKind::OneFour => one_four(a),
        InverseKind::Group => group_inverse(a),
        InverseKind::MoorePenrose => mp_inverse(a),
        InverseKind::Core => core_inverse(a),
        InverseKind::DualCore => dual_core_inverse(a),
    }
}

/// Jacobson's lemma: when 1 + ab is invertible with inverse x,
/// (1 + ba)^{-1} = 1 - b x a. The returned matrix is checked to be a
/// two-sided inverse of 1 + ba.
pub fn jacobson(
    a: &StarMatrix,
    b: &StarMatrix,
) -> std::result::Result<StarMatrix, NonExistent> {
    let id = StarMatrix::identity(a.field(), a.dim());
    let one_ab = id.add(&a.mul(b).unwrap()).unwrap();
    let x = one_ab.try_inverse().ok_or_else(|| NonExistent {
        kind: InverseKind::Inner,
        reason: "1 + ab is singular".into(),
    })?;
    let out = id.sub(&b.mul(&x).unwrap().mul(a).unwrap()).unwrap();
    let one_ba = id.add(&b.mul(a).unwrap()).unwrap();
    assert!(out.mul(&one_ba).unwrap().is_identity());
    assert!(one_ba.mul(&out).unwrap().is_identity());
    Ok(out)
}

/// Seeded sample from the affine solution space of a* a x = a*; every
/// solution is a {1,3}-inverse. Returns `None` when a has no {1,3}-inverse.
pub fn sample_one_three(a: &StarMatrix, seed: u64) -> Option<StarMatrix> {
    let lhs = a.star().mul(a).expect("a* a");
    let x0 = lhs.solve_ax_eq_b(&a.star())?;
    let h = crate::lab::random_null_space_element(&lhs, seed);
    let x = x0.add(&h).expect("x0 + h");
    debug_assert!(axioms_hold(InverseKind::OneThree, a, &x));
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn q(rows: &[&[i64]]) -> StarMatrix {
        StarMatrix::from_i64s(FieldSpec::Q, rows)
    }

    fn qr(rows: &[&[&str]]) -> StarMatrix {
        StarMatrix::from_tokens(FieldSpec::Q, rows).unwrap()
    }

    #[test]
    fn inner_inverse_edge_cases() {
        let z = StarMatrix::zero(FieldSpec::Q, 2);
        assert_eq!(inner_inverse(&z).value, z);
        let id = StarMatrix::identity(FieldSpec::Q, 3);
        assert_eq!(inner_inverse(&id).value, id);
        let a = q(&[&[0, 1], &[0, 0]]);
        let g = inner_inverse(&a).value;
        assert!(axioms_hold(InverseKind::Inner, &a, &g));
        // the paper's alternative inner inverse lies in the family too
        let alt = q(&[&[0, 0], &[1, 1]]);
        assert!(InnerInverseFamily::new(&a).contains(&alt));
    }

    #[test]
    fn one_three_paper_cases() {
        let id = StarMatrix::identity(FieldSpec::Q, 2);
        assert_eq!(one_three(&id).unwrap().value, id);

        let a = q(&[&[1, -2], &[1, -2]]);
        let c = one_three(&a).unwrap();
        assert!(axioms_hold(InverseKind::OneThree, &a, &c.value));
        // the paper's a† qualifies as a {1,3}-inverse
        let adag = qr(&[&["1/10", "1/10"], &["-1/5", "-1/5"]]);
        assert!(axioms_hold(InverseKind::OneThree, &a, &adag));

        let f2 = FieldSpec::fp(2).unwrap();
        let a = StarMatrix::from_i64s(f2, &[&[1, 1], &[1, 1]]);
        assert!(one_three(&a).is_err());
    }

    #[test]
    fn one_four_mirrors_one_three() {
        let a = q(&[&[1, -2], &[1, -2]]);
        let c = one_four(&a).unwrap();
        assert!(axioms_hold(InverseKind::OneFour, &a, &c.value));
        // candidate cross-check: star(one_three(star(a))) is a {1,4}-inverse
        let cand = one_three(&a.star()).unwrap().value.star();
        assert!(axioms_hold(InverseKind::OneFour, &a, &cand));

        let f2 = FieldSpec::fp(2).unwrap();
        let b = StarMatrix::from_i64s(f2, &[&[1, 1], &[1, 1]]);
        assert!(one_four(&b).is_err());
    }

    #[test]
    fn group_inverse_paper_cases() {
        let a = q(&[&[1, -2], &[1, -2]]);
        assert_eq!(group_inverse(&a).unwrap().value, a);

        let nil = q(&[&[0, 1], &[0, 0]]);
        assert!(group_inverse(&nil).is_err());

        let id = StarMatrix::identity(FieldSpec::Q, 2);
        assert_eq!(group_inverse(&id).unwrap().value, id);
    }

    #[test]
    fn group_via_units_cases() {
        let id = StarMatrix::identity(FieldSpec::Q, 2);
        let c = group_via_units(&id, &id, 1).unwrap();
        assert_eq!(c.value, id);

        let a = q(&[&[0, 1], &[0, 0]]);
        let g = q(&[&[0, 0], &[1, 1]]);
        assert!(matches!(
            group_via_units(&a, &g, 1),
            Err(FormulaError::NonExistent(_))
        ));

        let a = q(&[&[1, -2], &[1, -2]]);
        let adag = qr(&[&["1/10", "1/10"], &["-1/5", "-1/5"]]);
        for k in 1..=3 {
            assert_eq!(group_via_units(&a, &adag, k).unwrap().value, a);
        }
    }

    #[test]
    fn mp_inverse_paper_cases() {
        let a = q(&[&[1, -2], &[1, -2]]);
        let adag = qr(&[&["1/10", "1/10"], &["-1/5", "-1/5"]]);
        assert_eq!(mp_inverse(&a).unwrap().value, adag);

        let z = StarMatrix::zero(FieldSpec::Q, 2);
        assert_eq!(mp_inverse(&z).unwrap().value, z);

        let f2 = FieldSpec::fp(2).unwrap();
        let b = StarMatrix::from_i64s(f2, &[&[1, 1], &[1, 1]]);
        assert!(mp_inverse(&b).is_err());
    }

    #[test]
    fn mp_via_lemma_diagonal() {
        let a = q(&[&[2, 0], &[0, 0]]);
        let c = mp_via_lemma(&a).unwrap();
        assert_eq!(c.value, qr(&[&["1/2", "0"], &["0", "0"]]));

        let id = StarMatrix::identity(FieldSpec::Q, 2);
        assert_eq!(mp_via_lemma(&id).unwrap().value, id);
    }

    #[test]
    fn core_inverse_paper_cases() {
        let a = q(&[&[1, -2], &[1, -2]]);
        let expect = qr(&[&["-1/2", "-1/2"], &["-1/2", "-1/2"]]);
        assert_eq!(core_inverse(&a).unwrap().value, expect);

        let herm = q(&[&[1, 0], &[0, 0]]);
        assert_eq!(core_inverse(&herm).unwrap().value, herm);

        let nil = q(&[&[0, 1], &[0, 0]]);
        let err = core_inverse(&nil).unwrap_err();
        assert!(err.reason.contains("R^#"));
    }

    #[test]
    fn dual_core_paper_cases() {
        let herm = q(&[&[1, 0], &[0, 0]]);
        assert_eq!(dual_core_inverse(&herm).unwrap().value, herm);

        let a = q(&[&[1, -2], &[1, -2]]);
        let expect = qr(&[&["-1/5", "2/5"], &["2/5", "-4/5"]]);
        assert_eq!(dual_core_inverse(&a).unwrap().value, expect);

        let z = StarMatrix::zero(FieldSpec::Q, 2);
        assert_eq!(dual_core_inverse(&z).unwrap().value, z);
    }

    #[test]
    fn jacobson_cases() {
        let id = StarMatrix::identity(FieldSpec::Q, 2);
        let z = StarMatrix::zero(FieldSpec::Q, 2);
        let b = q(&[&[1, 2], &[3, 4]]);
        assert_eq!(jacobson(&z, &b).unwrap(), id);

        let half = crate::scalar::Scalar::from_ratio(FieldSpec::Q, 1, 2);
        assert_eq!(jacobson(&id, &id).unwrap(), id.scale(&half).unwrap());
    }
}
