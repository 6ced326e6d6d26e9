//! Literal evaluation of the unit-based existence criteria.
//!
//! Every condition is evaluated exactly as stated: unit invertibility as
//! `try_inverse`, one-sided invertibility by solving SA = 1 or AS = 1, and
//! range conditions aR = a^2 R as solvability of a = a^2 x.

use crate::error::{Error, Result};
use crate::geninv::{self, InverseKind};
use crate::matrix::{Side, StarMatrix};

/// The equivalence chains (and one-directional criteria) from the unit
/// characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainId {
    /// a ∈ R^# iff a^k + 1 - a a^- iff a^k + 1 - a^- a invertible.
    GroupUnits,
    /// The six equivalent core-invertibility conditions (existential in a^-).
    CoreUnits,
    /// a ∈ R^(1,3) and (a*)^k + 1 - a a^(1,3) invertible iff a ∈ R^(#).
    KCore,
    /// Dedekind-finite form: a ∈ R^(1,3) and a*a + 1 - a a^(1,3) invertible.
    DedekindCore,
    /// a ∈ R^# ∩ R† iff the four three-factor units are invertible.
    Chen,
    /// The nine one-sided MP conditions.
    OneSidedMp,
    /// The five two-sided MP unit conditions.
    MpUnits,
    /// a ∈ R† and aR = a^2 R iff right invertibility of the named units.
    RangeRight,
    /// a ∈ R† and Ra = Ra^2 iff left invertibility of the named units.
    RangeLeft,
}

impl ChainId {
    pub fn condition_count(&self) -> usize {
        match self {
            ChainId::GroupUnits | ChainId::KCore | ChainId::DedekindCore => 3,
            ChainId::CoreUnits | ChainId::Chen => 6,
            ChainId::OneSidedMp => 9,
            ChainId::MpUnits => 5,
            ChainId::RangeRight | ChainId::RangeLeft => 3,
        }
    }

    /// Whether the chain's unit conditions quantify existentially over the
    /// whole inner-inverse family (rather than holding per fixed inner
    /// inverse).
    pub fn existential(&self) -> bool {
        matches!(self, ChainId::CoreUnits)
    }

    /// Whether the g argument must be a {1,3}-inverse rather than an
    /// arbitrary inner inverse.
    pub fn requires_one_three(&self) -> bool {
        matches!(self, ChainId::KCore | ChainId::DedekindCore)
    }

    pub fn uses_k(&self) -> bool {
        matches!(self, ChainId::GroupUnits | ChainId::KCore)
    }
}

/// One condition of one chain, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriterionId {
    pub chain: ChainId,
    pub cond: usize,
}

/// The truth value of a condition plus every witness computed on the way.
#[derive(Debug, Clone)]
pub struct CriterionEval {
    pub holds: bool,
    pub witnesses: Vec<(String, StarMatrix)>,
}

/// Evaluate one named condition on (a, g, k).
pub fn existence_criteria(
    a: &StarMatrix,
    c: CriterionId,
    g: Option<&StarMatrix>,
    k: u32,
) -> Result<CriterionEval> {
    if c.cond >= c.chain.condition_count() {
        return Err(Error::InvalidArgument(format!(
            "chain {:?} has no condition {}",
            c.chain, c.cond
        )));
    }
    let id = StarMatrix::identity(a.field(), a.dim());
    let astar = a.star();
    let need_g = !matches!((c.chain, c.cond), (_, 0) | (ChainId::Chen, 1));
    let g = match g {
        Some(g) => Some(g),
        None if need_g => {
            return Err(Error::InvalidArgument(
                "condition quantifies over an inner inverse; g required".into(),
            ))
        }
        None => None,
    };
    let mut witnesses: Vec<(String, StarMatrix)> = Vec::new();
    // u = base + 1 - corr
    let unit = |base: &StarMatrix, corr: &StarMatrix| base.add(&id).unwrap().sub(corr).unwrap();
    let check = |name: &str, m: StarMatrix, probe: Probe, w: &mut Vec<(String, StarMatrix)>| {
        let witness = match probe {
            Probe::TwoSided => m.try_inverse(),
            Probe::Left => m.one_sided_invertible(Side::Left),
            Probe::Right => m.one_sided_invertible(Side::Right),
        };
        w.push((name.to_string(), m));
        match witness {
            Some(s) => {
                w.push((format!("{name} witness"), s));
                true
            }
            None => false,
        }
    };

    use Probe::{Left, Right, TwoSided};
    let ag = g.map(|g| a.mul(g).unwrap());
    let ga = g.map(|g| g.mul(a).unwrap());
    let ag = ag.as_ref();
    let ga = ga.as_ref();
    let aasta = a.mul(&astar).unwrap().mul(a).unwrap();
    let holds = match (c.chain, c.cond) {
        (ChainId::GroupUnits, 0) => solver_exists(InverseKind::Group, a, &mut witnesses),
        (ChainId::GroupUnits, 1) => check("a^k+1-aa^-", unit(&a.pow(k), ag.unwrap()), TwoSided, &mut witnesses),
        (ChainId::GroupUnits, 2) => check("a^k+1-a^-a", unit(&a.pow(k), ga.unwrap()), TwoSided, &mut witnesses),

        (ChainId::CoreUnits, 0) => solver_exists(InverseKind::Core, a, &mut witnesses),
        (ChainId::CoreUnits, 1) => {
            check("a+1-aa^-", unit(a, ag.unwrap()), TwoSided, &mut witnesses)
                && check("a*+1-aa^-", unit(&astar, ag.unwrap()), TwoSided, &mut witnesses)
        }
        (ChainId::CoreUnits, 2) => {
            check("a+1-aa^-", unit(a, ag.unwrap()), TwoSided, &mut witnesses)
                && check("a*+1-aa^-", unit(&astar, ag.unwrap()), Left, &mut witnesses)
        }
        (ChainId::CoreUnits, 3) => {
            check("a*a+1-aa^-", unit(&astar.mul(a).unwrap(), ag.unwrap()), TwoSided, &mut witnesses)
                && check("(a*)^2+1-aa^-", unit(&astar.pow(2), ag.unwrap()), TwoSided, &mut witnesses)
        }
        (ChainId::CoreUnits, 4) => {
            check("a*a+1-aa^-", unit(&astar.mul(a).unwrap(), ag.unwrap()), Left, &mut witnesses)
                && check("(a*)^2+1-aa^-", unit(&astar.pow(2), ag.unwrap()), Left, &mut witnesses)
        }
        (ChainId::CoreUnits, 5) => {
            check("a+1-aa^-", unit(a, ag.unwrap()), Left, &mut witnesses)
                && check("(a*)^2+1-aa^-", unit(&astar.pow(2), ag.unwrap()), Left, &mut witnesses)
        }

        (ChainId::KCore, 0) => solver_exists(InverseKind::Core, a, &mut witnesses),
        (ChainId::KCore, 1 | 2) => {
            solver_exists(InverseKind::OneThree, a, &mut witnesses)
                && check("(a*)^k+1-aa^(1,3)", unit(&astar.pow(k), ag.unwrap()), TwoSided, &mut witnesses)
        }

        (ChainId::DedekindCore, 0) => solver_exists(InverseKind::Core, a, &mut witnesses),
        (ChainId::DedekindCore, 1 | 2) => {
            solver_exists(InverseKind::OneThree, a, &mut witnesses)
                && check("a*a+1-aa^(1,3)", unit(&astar.mul(a).unwrap(), ag.unwrap()), TwoSided, &mut witnesses)
        }

        (ChainId::Chen, 0) => {
            solver_exists(InverseKind::Group, a, &mut witnesses)
                && solver_exists(InverseKind::MoorePenrose, a, &mut witnesses)
        }
        (ChainId::Chen, 1) => {
            solver_exists(InverseKind::Core, a, &mut witnesses)
                && solver_exists(InverseKind::DualCore, a, &mut witnesses)
        }
        (ChainId::Chen, 2) => check("aa*a+1-aa^-", unit(&aasta, ag.unwrap()), TwoSided, &mut witnesses),
        (ChainId::Chen, 3) => check("aa*a+1-a^-a", unit(&aasta, ga.unwrap()), TwoSided, &mut witnesses),
        (ChainId::Chen, 4) => check("a*a^2+1-a^-a", unit(&astar.mul(&a.pow(2)).unwrap(), ga.unwrap()), TwoSided, &mut witnesses),
        (ChainId::Chen, 5) => check("a^2a*+1-aa^-", unit(&a.pow(2).mul(&astar).unwrap(), ag.unwrap()), TwoSided, &mut witnesses),

        (ChainId::OneSidedMp, 0) => solver_exists(InverseKind::MoorePenrose, a, &mut witnesses),
        (ChainId::OneSidedMp, i @ (1 | 5)) => {
            let probe = if i == 1 { Right } else { Left };
            check("aa*+1-aa^-", unit(&a.mul(&astar).unwrap(), ag.unwrap()), probe, &mut witnesses)
        }
        (ChainId::OneSidedMp, i @ (2 | 6)) => {
            let probe = if i == 2 { Right } else { Left };
            check("a*a+1-a^-a", unit(&astar.mul(a).unwrap(), ga.unwrap()), probe, &mut witnesses)
        }
        (ChainId::OneSidedMp, i @ (3 | 7)) => {
            let probe = if i == 3 { Right } else { Left };
            let base = aasta.mul(g.unwrap()).unwrap();
            check("aa*aa^-+1-aa^-", unit(&base, ag.unwrap()), probe, &mut witnesses)
        }
        (ChainId::OneSidedMp, i @ (4 | 8)) => {
            let probe = if i == 4 { Right } else { Left };
            let base = g.unwrap().mul(&aasta).unwrap();
            check("a^-aa*a+1-a^-a", unit(&base, ga.unwrap()), probe, &mut witnesses)
        }

        (ChainId::MpUnits, 0) => solver_exists(InverseKind::MoorePenrose, a, &mut witnesses),
        (ChainId::MpUnits, 1) => check("aa*+1-aa^-", unit(&a.mul(&astar).unwrap(), ag.unwrap()), TwoSided, &mut witnesses),
        (ChainId::MpUnits, 2) => check("a*a+1-a^-a", unit(&astar.mul(a).unwrap(), ga.unwrap()), TwoSided, &mut witnesses),
        (ChainId::MpUnits, 3) => {
            let base = aasta.mul(g.unwrap()).unwrap();
            check("aa*aa^-+1-aa^-", unit(&base, ag.unwrap()), TwoSided, &mut witnesses)
        }
        (ChainId::MpUnits, 4) => {
            let base = g.unwrap().mul(&aasta).unwrap();
            check("a^-aa*a+1-a^-a", unit(&base, ga.unwrap()), TwoSided, &mut witnesses)
        }

        (ChainId::RangeRight, 0) => {
            let range = a.pow(2).solve_ax_eq_b(a);
            if let Some(x) = &range {
                witnesses.push(("x with a = a^2 x".into(), x.clone()));
            }
            solver_exists(InverseKind::MoorePenrose, a, &mut witnesses) && range.is_some()
        }
        (ChainId::RangeRight, 1) => check("aa*a+1-aa^-", unit(&aasta, ag.unwrap()), Right, &mut witnesses),
        (ChainId::RangeRight, 2) => check("a*a^2+1-a^-a", unit(&astar.mul(&a.pow(2)).unwrap(), ga.unwrap()), Right, &mut witnesses),

        (ChainId::RangeLeft, 0) => {
            let range = a.pow(2).solve_xa_eq_b(a);
            if let Some(x) = &range {
                witnesses.push(("x with a = x a^2".into(), x.clone()));
            }
            solver_exists(InverseKind::MoorePenrose, a, &mut witnesses) && range.is_some()
        }
        (ChainId::RangeLeft, 1) => check("aa*a+1-a^-a", unit(&aasta, ga.unwrap()), Left, &mut witnesses),
        (ChainId::RangeLeft, 2) => check("a^2a*+1-aa^-", unit(&a.pow(2).mul(&astar).unwrap(), ag.unwrap()), Left, &mut witnesses),

        _ => unreachable!(),
    };
    Ok(CriterionEval { holds, witnesses })
}

#[derive(Clone, Copy)]
enum Probe {
    TwoSided,
    Left,
    Right,
}

fn solver_exists(
    kind: InverseKind,
    a: &StarMatrix,
    witnesses: &mut Vec<(String, StarMatrix)>,
) -> bool {
    match geninv::solve(kind, a) {
        Ok(cert) => {
            witnesses.push((format!("a^({kind})"), cert.value));
            true
        }
        Err(_) => false,
    }
}
