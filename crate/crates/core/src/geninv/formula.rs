//! The unit-based representation formula catalog.
//!
//! Each formula names one or two units built from a, the involution and an
//! inner inverse of a given class, inverts them, and assembles the target
//! inverse. A returned certificate always passes the defining axiom check;
//! an invertible unit whose result fails the axioms is reported as a
//! premise violation, never as a wrong answer.

use std::fmt;

use crate::error::{Error, Result};
use crate::geninv::{
    axiom_checks, axioms_hold, one_four, one_three, FormulaError, InverseCertificate,
    InverseKind, NonExistent,
};
use crate::matrix::StarMatrix;

/// Which inner-inverse class a formula requires its g argument to lie in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerClass {
    /// Any inner inverse.
    Any,
    /// A {1,3}-inverse.
    OneThree,
    /// The Moore-Penrose inverse.
    Mp,
    /// The group inverse.
    Group,
    /// The formula takes no inner inverse.
    None,
}

macro_rules! formula_ids {
    ($($name:ident),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum FormulaId { $($name),* }

        impl FormulaId {
            pub const ALL: &'static [FormulaId] = &[$(FormulaId::$name),*];

            pub fn parse(s: &str) -> Option<FormulaId> {
                match s {
                    $(stringify!($name) => Some(FormulaId::$name),)*
                    _ => None,
                }
            }
        }

        impl fmt::Display for FormulaId {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self {
                    $(FormulaId::$name => f.write_str(stringify!($name))),*
                }
            }
        }
    };
}

formula_ids!(
    C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, D1, D2, D3, G1, G2, G3, G4, M1, M2, M3,
    M4, M5,
);

impl FormulaId {
    /// The inverse notion the formula computes.
    pub fn kind(&self) -> InverseKind {
        use FormulaId::*;
        match self {
            C1 | C2 | C3 | C4 | C5 | C6 | C7 | C8 | C9 | C10 | C11 | C12 => InverseKind::Core,
            D1 | D2 | D3 => InverseKind::DualCore,
            G1 | G2 | G3 | G4 => InverseKind::Group,
            M1 | M2 | M3 | M4 | M5 => InverseKind::MoorePenrose,
        }
    }

    pub fn required_class(&self) -> InnerClass {
        use FormulaId::*;
        match self {
            C1 | C2 | C3 | C4 | C9 | D1 | G1 | G2 | G3 | M3 | M4 => InnerClass::Any,
            C5 | C6 | C7 | C8 => InnerClass::OneThree,
            C10 | C11 | D2 | G4 => InnerClass::Mp,
            C12 | D3 | M5 => InnerClass::Group,
            M1 | M2 => InnerClass::None,
        }
    }

    pub fn uses_k(&self) -> bool {
        matches!(self, FormulaId::C4 | FormulaId::C5 | FormulaId::C6 | FormulaId::G1)
    }
}

/// Evaluate formula `f` on `a` with inner inverse `g` (of the class the
/// catalog demands) and exponent `k` where the formula uses one.
pub fn apply_formula(
    f: FormulaId,
    a: &StarMatrix,
    g: Option<&StarMatrix>,
    k: u32,
) -> Result<std::result::Result<InverseCertificate, FormulaError>> {
    use FormulaId::*;
    if f.uses_k() && k < 1 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    if f == C6 && k < 2 {
        return Err(Error::InvalidArgument("C6 requires k >= 2".into()));
    }

    let class = f.required_class();
    let g = match (class, g) {
        (InnerClass::None, _) => None,
        (_, Some(g)) => {
            if g.field() != a.field() || g.dim() != a.dim() {
                return Err(Error::InvalidArgument(
                    "inner inverse has wrong field or dimension".into(),
                ));
            }
            Some(g)
        }
        (_, None) => {
            return Err(Error::InvalidArgument(format!(
                "formula {f} requires an inner inverse argument"
            )))
        }
    };

    // class premises: inner-ness is always a hard premise; the {1,3}
    // refinement is deliberately left to post-verification, while the
    // unique classes (a†, a^#) are checked up front.
    if let Some(g) = g {
        if !axioms_hold(InverseKind::Inner, a, g) {
            return Ok(Err(FormulaError::PremiseViolation {
                equation: "a g a = a".into(),
            }));
        }
        let unique_class = match class {
            InnerClass::Mp => Some((InverseKind::MoorePenrose, "g is not the Moore-Penrose inverse of a")),
            InnerClass::Group => Some((InverseKind::Group, "g is not the group inverse of a")),
            _ => None,
        };
        if let Some((kind, msg)) = unique_class {
            if !axioms_hold(kind, a, g) {
                return Ok(Err(FormulaError::PremiseViolation {
                    equation: msg.into(),
                }));
            }
        }
    }

    // global premise of the k-exponent theorem
    if f == C4 && crate::geninv::core_inverse(a).is_err() {
        return Ok(Err(FormulaError::PremiseViolation {
            equation: "a ∉ R^(#)".into(),
        }));
    }

    let id = StarMatrix::identity(a.field(), a.dim());
    let astar = a.star();
    let ag = g.map(|g| a.mul(g).unwrap());
    let ga = g.map(|g| g.mul(a).unwrap());
    // u = base + 1 - corr
    let unit = |base: &StarMatrix, corr: &StarMatrix| base.add(&id).unwrap().sub(corr).unwrap();
    let mut witnesses: Vec<(String, StarMatrix)> = Vec::new();

    let value = (|| {
        let mut invert = |name: &str, u: StarMatrix| invert_unit(f, name, u, &mut witnesses);
        let ag = ag.as_ref();
        let ga = ga.as_ref();
        Ok::<StarMatrix, FormulaError>(match f {
            C1 => {
                let w = invert("a*a+1-aa^-", unit(&astar.mul(a).unwrap(), ag.unwrap()))?;
                w.mul(&astar).unwrap()
            }
            C2 => {
                let w = invert("(a*)^2+1-aa^-", unit(&astar.pow(2), ag.unwrap()))?;
                a.mul(&w.star()).unwrap()
            }
            C3 => {
                let w1 = invert("a+1-aa^-", unit(a, ag.unwrap()))?;
                let w2 = invert("a*+1-aa^-", unit(&astar, ag.unwrap()))?;
                w1.mul(a).unwrap().mul(&w2.star()).unwrap()
            }
            C4 => {
                let w = invert("(a*)^(k+1)+1-aa^-", unit(&astar.pow(k + 1), ag.unwrap()))?;
                a.pow(k).mul(&w.star()).unwrap()
            }
            C5 => {
                let u = invert("(a*)^k+1-aa^(1,3)", unit(&astar.pow(k), ag.unwrap()))?;
                let us = u.star();
                us.mul(&a.pow(2 * k - 1)).unwrap().mul(&us).unwrap()
            }
            C6 => {
                let u = invert("(a*)^k+1-aa^(1,3)", unit(&astar.pow(k), ag.unwrap()))?;
                a.pow(k - 1).mul(&u.star()).unwrap()
            }
            C7 => {
                let u = invert("a*+1-aa^(1,3)", unit(&astar, ag.unwrap()))?;
                u.star().mul(&u).unwrap().mul(&astar).unwrap()
            }
            C8 => {
                let v = invert("a*a+1-aa^(1,3)", unit(&astar.mul(a).unwrap(), ag.unwrap()))?;
                v.mul(&astar).unwrap()
            }
            C9 => {
                let base = a.mul(&astar).unwrap().mul(a).unwrap();
                let u = invert("aa*a+1-aa^-", unit(&base, ag.unwrap()))?;
                u.mul(a).unwrap().mul(&astar).unwrap()
            }
            C10 => {
                let base = a.pow(2).mul(&astar).unwrap();
                let t = invert("a^2a*+1-aa†", unit(&base, ag.unwrap()))?;
                a.mul(&astar).unwrap().mul(&t).unwrap()
            }
            C11 => {
                let u = invert("a*+1-aa†", unit(&astar, ag.unwrap()))?;
                u.star().mul(&u).unwrap().mul(&astar).unwrap()
            }
            C12 => {
                let u = invert("a*+1-aa^#", unit(&astar, ag.unwrap()))?;
                g.unwrap().mul(a).unwrap().mul(&u.star()).unwrap()
            }
            D1 => {
                let base = a.mul(&astar).unwrap().mul(a).unwrap();
                let v = invert("aa*a+1-a^-a", unit(&base, ga.unwrap()))?;
                astar.mul(a).unwrap().mul(&v).unwrap()
            }
            D2 => {
                let base = astar.mul(&a.pow(2)).unwrap();
                let s = invert("a*a^2+1-a†a", unit(&base, ga.unwrap()))?;
                s.mul(&astar).unwrap().mul(a).unwrap()
            }
            D3 => {
                let u = invert("a*+1-aa^#", unit(&astar, ag.unwrap()))?;
                u.star().mul(a).unwrap().mul(g.unwrap()).unwrap()
            }
            G1 => {
                let u = invert("a^k+1-aa^-", unit(&a.pow(k), ag.unwrap()))?;
                let v = invert("a^k+1-a^-a", unit(&a.pow(k), ga.unwrap()))?;
                u.mul(&a.pow(2 * k - 1)).unwrap().mul(&v).unwrap()
            }
            G2 => {
                let base = a.pow(2).mul(&astar).unwrap();
                let t = invert("a^2a*+1-aa^-", unit(&base, ag.unwrap()))?;
                let aat = a.mul(&astar).unwrap().mul(&t).unwrap();
                aat.pow(2).mul(a).unwrap()
            }
            G3 => {
                let base = astar.mul(&a.pow(2)).unwrap();
                let s = invert("a*a^2+1-a^-a", unit(&base, ga.unwrap()))?;
                let saa = s.mul(&astar).unwrap().mul(a).unwrap();
                a.mul(&saa.pow(2)).unwrap()
            }
            G4 => {
                let u = invert("a*+1-aa†", unit(&astar, ag.unwrap()))?;
                u.pow(2).star().mul(a).unwrap()
            }
            M1 => {
                let x14 = one_four(a).map_err(mp_nonexistent)?;
                let x13 = one_three(a).map_err(mp_nonexistent)?;
                witnesses.push(("a^(1,4)".into(), x14.value.clone()));
                witnesses.push(("a^(1,3)".into(), x13.value.clone()));
                x14.value.mul(a).unwrap().mul(&x13.value).unwrap()
            }
            M2 => {
                let aaa = a.mul(&astar).unwrap().mul(a).unwrap();
                let x = aaa.solve_ax_eq_b(a).ok_or_else(|| {
                    FormulaError::NonExistent(NonExistent {
                        kind: InverseKind::MoorePenrose,
                        reason: "a a* a x = a unsolvable".into(),
                    })
                })?;
                witnesses.push(("x".into(), x.clone()));
                astar
                    .mul(a)
                    .unwrap()
                    .mul(&x.pow(2))
                    .unwrap()
                    .mul(&astar)
                    .unwrap()
            }
            M3 => {
                let base = a.pow(2).mul(&astar).unwrap();
                let t = invert("a^2a*+1-aa^-", unit(&base, ag.unwrap()))?;
                t.mul(&a.pow(2)).unwrap().star()
            }
            M4 => {
                let base = astar.mul(&a.pow(2)).unwrap();
                let s = invert("a*a^2+1-a^-a", unit(&base, ga.unwrap()))?;
                a.pow(2).mul(&s).unwrap().star()
            }
            M5 => {
                let u = invert("a*+1-aa^#", unit(&astar, ag.unwrap()))?;
                let us = u.star();
                us.mul(a).unwrap().mul(&us).unwrap()
            }
        })
    })();
    let value = match value {
        Ok(v) => v,
        Err(e) => return Ok(Err(e)),
    };

    let checks = axiom_checks(f.kind(), a, &value)?;
    if let Some((eq, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Ok(Err(FormulaError::PremiseViolation {
            equation: (*eq).to_string(),
        }));
    }
    Ok(Ok(InverseCertificate {
        kind: f.kind(),
        value,
        witnesses,
        axiom_check: checks,
    }))
}

fn invert_unit(
    f: FormulaId,
    name: &str,
    u: StarMatrix,
    witnesses: &mut Vec<(String, StarMatrix)>,
) -> std::result::Result<StarMatrix, FormulaError> {
    match u.try_inverse() {
        Some(inv) => {
            witnesses.push((name.to_string(), u));
            witnesses.push((format!("{name}^-1"), inv.clone()));
            Ok(inv)
        }
        None => Err(FormulaError::NonExistent(NonExistent {
            kind: f.kind(),
            reason: format!("unit {name} is singular"),
        })),
    }
}

fn mp_nonexistent(e: NonExistent) -> FormulaError {
    FormulaError::NonExistent(NonExistent {
        kind: InverseKind::MoorePenrose,
        reason: e.reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geninv::{core_inverse, mp_inverse};
    use crate::scalar::FieldSpec;

    fn paper_a() -> StarMatrix {
        StarMatrix::from_i64s(FieldSpec::Q, &[&[1, -2], &[1, -2]])
    }

    #[test]
    fn c1_matches_core_inverse_with_mp_as_inner() {
        let a = paper_a();
        let g = mp_inverse(&a).unwrap().value;
        let got = apply_formula(FormulaId::C1, &a, Some(&g), 1)
            .unwrap()
            .unwrap();
        assert_eq!(got.value, core_inverse(&a).unwrap().value);
    }

    #[test]
    fn c7_premise_violation_for_non_one_three_inner() {
        // A^- = [[0,1],[0,0]] is inner but not a {1,3}-inverse; the C7 shape
        // evaluates to (1/4)[[0,0],[-1,-1]] != A^(#) and must be flagged.
        let a = paper_a();
        let g = StarMatrix::from_i64s(FieldSpec::Q, &[&[0, 1], &[0, 0]]);
        let out = apply_formula(FormulaId::C7, &a, Some(&g), 1).unwrap();
        assert!(matches!(out, Err(FormulaError::PremiseViolation { .. })));
    }

    #[test]
    fn g1_on_identity() {
        let id = StarMatrix::identity(FieldSpec::Q, 2);
        let got = apply_formula(FormulaId::G1, &id, Some(&id), 1)
            .unwrap()
            .unwrap();
        assert_eq!(got.value, id);
    }

    #[test]
    fn c6_requires_k_at_least_two() {
        let a = paper_a();
        let g = mp_inverse(&a).unwrap().value;
        assert!(apply_formula(FormulaId::C6, &a, Some(&g), 1).is_err());
        let got = apply_formula(FormulaId::C6, &a, Some(&g), 2)
            .unwrap()
            .unwrap();
        assert_eq!(got.value, core_inverse(&a).unwrap().value);
    }

    #[test]
    fn mp_class_rejects_non_mp_inner() {
        let a = paper_a();
        let g = StarMatrix::from_tokens(FieldSpec::Q, &[&["2/3", "1/3"], &["0", "0"]]).unwrap();
        let out = apply_formula(FormulaId::C10, &a, Some(&g), 1).unwrap();
        assert!(matches!(out, Err(FormulaError::PremiseViolation { .. })));
    }

    #[test]
    fn missing_inner_argument_is_a_usage_error() {
        let a = paper_a();
        assert!(apply_formula(FormulaId::C1, &a, None, 1).is_err());
    }
}
