//! Brute-force ground truth over small matrix rings M_n(F_p): every
//! inverse notion is decided by scanning all candidates against the raw
//! defining equations, with no shared code path with the solvers. The
//! comparison pass then pits the solvers, formulas and criteria against
//! this table.

use crate::error::{Error, Result};
use crate::geninv::criteria::ChainId;
use crate::geninv::{self, axioms_hold, InverseKind};
use crate::lab::theorems::{chain_violation, Violation};
use crate::matrix::StarMatrix;
use crate::scalar::{FieldSpec, Scalar};

/// Ground truth for one ring element.
#[derive(Debug, Clone)]
pub struct OracleEntry {
    pub a: StarMatrix,
    pub inner_count: usize,
    pub one_three_count: usize,
    pub one_four_count: usize,
    pub group: Option<StarMatrix>,
    pub mp: Option<StarMatrix>,
    pub core: Option<StarMatrix>,
    pub dual_core: Option<StarMatrix>,
}

impl OracleEntry {
    pub fn exists(&self, kind: InverseKind) -> bool {
        match kind {
            InverseKind::Inner => self.inner_count > 0,
            InverseKind::OneThree => self.one_three_count > 0,
            InverseKind::OneFour => self.one_four_count > 0,
            InverseKind::Group => self.group.is_some(),
            InverseKind::MoorePenrose => self.mp.is_some(),
            InverseKind::Core => self.core.is_some(),
            InverseKind::DualCore => self.dual_core.is_some(),
        }
    }
}

/// How many elements of the ring admit each inverse notion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCounts {
    pub elements: usize,
    pub units: usize,
    pub one_three: usize,
    pub one_four: usize,
    pub group: usize,
    pub mp: usize,
    pub core: usize,
    pub dual_core: usize,
}

#[derive(Debug, Clone)]
pub struct OracleTable {
    pub field: FieldSpec,
    pub n: usize,
    pub entries: Vec<OracleEntry>,
    pub counts: OracleCounts,
}

/// Every element of M_n(F_p), in a fixed base-p digit order.
pub fn all_matrices(field: FieldSpec, n: usize) -> Result<Vec<StarMatrix>> {
    let FieldSpec::Fp(p) = field else {
        return Err(Error::InvalidArgument(
            "exhaustive enumeration requires a finite field".into(),
        ));
    };
    let total = (p as usize)
        .checked_pow((n * n) as u32)
        .filter(|t| *t <= 10_000)
        .ok_or_else(|| {
            Error::InvalidArgument(format!("ring M_{n}(F_{p}) exceeds the 10^4 element budget"))
        })?;
    Ok((0..total)
        .map(|idx| {
            let mut rem = idx;
            StarMatrix::from_fn(field, n, |_, _| {
                let digit = (rem % p as usize) as i64;
                rem /= p as usize;
                Scalar::from_i64(field, digit)
            })
        })
        .collect())
}

/// Build the ground-truth table for M_n(F_p) by exhaustive scan. Verifies
/// along the way that group, Moore-Penrose, core and dual core inverses
/// are unique when they exist, and that the three-equation core (and dual
/// core) characterization carves out exactly the five-equation solution
/// set.
pub fn build_oracle(p: u64, n: usize) -> Result<OracleTable> {
    let field = FieldSpec::fp(p)?;
    let all = all_matrices(field, n)?;
    let mut entries = Vec::with_capacity(all.len());
    let mut counts = OracleCounts {
        elements: all.len(),
        units: 0,
        one_three: 0,
        one_four: 0,
        group: 0,
        mp: 0,
        core: 0,
        dual_core: 0,
    };
    for a in &all {
        let mut entry = OracleEntry {
            a: a.clone(),
            inner_count: 0,
            one_three_count: 0,
            one_four_count: 0,
            group: None,
            mp: None,
            core: None,
            dual_core: None,
        };
        let mut core_three_eq: Vec<StarMatrix> = Vec::new();
        let mut dual_three_eq: Vec<StarMatrix> = Vec::new();
        let unique = |slot: &mut Option<StarMatrix>, x: &StarMatrix, what: &str| {
            assert!(slot.is_none(), "{what} inverse not unique for\n{a}");
            *slot = Some(x.clone());
        };
        for x in &all {
            let ax = a.mul(x).unwrap();
            let xa = x.mul(a).unwrap();
            let inner = ax.mul(a).unwrap() == *a;
            let absorb = xa.mul(x).unwrap() == *x;
            let sym13 = ax.star() == ax;
            let sym14 = xa.star() == xa;
            if inner {
                entry.inner_count += 1;
                if sym13 {
                    entry.one_three_count += 1;
                }
                if sym14 {
                    entry.one_four_count += 1;
                }
                if absorb && ax == xa {
                    unique(&mut entry.group, x, "group");
                }
                if absorb && sym13 && sym14 {
                    unique(&mut entry.mp, x, "Moore-Penrose");
                }
                if absorb && sym13 && xa.mul(a).unwrap() == *a && ax.mul(x).unwrap() == *x {
                    unique(&mut entry.core, x, "core");
                }
                if absorb && sym14 && a.mul(&ax).unwrap() == *a && x.mul(&xa).unwrap() == *x {
                    unique(&mut entry.dual_core, x, "dual core");
                }
            }
            if sym13 && xa.mul(a).unwrap() == *a && ax.mul(x).unwrap() == *x {
                core_three_eq.push(x.clone());
            }
            if sym14 && a.mul(&ax).unwrap() == *a && x.mul(&xa).unwrap() == *x {
                dual_three_eq.push(x.clone());
            }
        }
        assert_eq!(
            core_three_eq,
            entry.core.clone().into_iter().collect::<Vec<_>>(),
            "three-equation core set differs from five-equation set for\n{a}"
        );
        assert_eq!(
            dual_three_eq,
            entry.dual_core.clone().into_iter().collect::<Vec<_>>(),
            "three-equation dual core set differs for\n{a}"
        );
        if a.try_inverse().is_some() {
            counts.units += 1;
        }
        counts.one_three += usize::from(entry.one_three_count > 0);
        counts.one_four += usize::from(entry.one_four_count > 0);
        counts.group += usize::from(entry.group.is_some());
        counts.mp += usize::from(entry.mp.is_some());
        counts.core += usize::from(entry.core.is_some());
        counts.dual_core += usize::from(entry.dual_core.is_some());
        entries.push(entry);
    }
    Ok(OracleTable {
        field,
        n,
        entries,
        counts,
    })
}

/// Result of pitting the library against the ground truth.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub elements_checked: usize,
    pub mismatches: Vec<Violation>,
}

impl ComparisonReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare every solver, the projection invariance facts, the star
/// duality, and all equivalence chains (over the *entire* inner-inverse
/// family) against the oracle table.
pub fn oracle_vs_algorithms(table: &OracleTable) -> ComparisonReport {
    let mut mismatches = Vec::new();
    fn bad_in(mismatches: &mut Vec<Violation>, detail: String, a: &StarMatrix) {
        mismatches.push(Violation {
            detail,
            matrices: vec![("a".into(), a.clone())],
        });
    }
    for entry in &table.entries {
        let a = &entry.a;
        // solver agreement, existence and (where unique) values
        for kind in [
            InverseKind::Inner,
            InverseKind::OneThree,
            InverseKind::OneFour,
            InverseKind::Group,
            InverseKind::MoorePenrose,
            InverseKind::Core,
            InverseKind::DualCore,
        ] {
            let solved = geninv::solve(kind, a);
            if solved.is_ok() != entry.exists(kind) {
                bad_in(&mut mismatches, 
                    format!(
                        "solver {kind}: exists={} but oracle says {}",
                        solved.is_ok(),
                        entry.exists(kind)
                    ),
                    a,
                );
                continue;
            }
            if let Ok(cert) = solved {
                let expect = match kind {
                    InverseKind::Group => entry.group.as_ref(),
                    InverseKind::MoorePenrose => entry.mp.as_ref(),
                    InverseKind::Core => entry.core.as_ref(),
                    InverseKind::DualCore => entry.dual_core.as_ref(),
                    _ => {
                        // non-unique kinds: the certificate must satisfy
                        // the oracle's raw equations
                        if !axioms_hold(kind, a, &cert.value) {
                            bad_in(&mut mismatches, format!("solver {kind}: invalid certificate"), a);
                        }
                        None
                    }
                };
                if let Some(expect) = expect {
                    if cert.value != *expect {
                        bad_in(&mut mismatches, format!("solver {kind}: value differs from oracle"), a);
                    }
                }
            }
        }
        // star-regularity route to the Moore-Penrose inverse
        match (geninv::mp_via_lemma(a), entry.mp.as_ref()) {
            (Ok(cert), Some(mp)) if cert.value == *mp => {}
            (Err(_), None) => {}
            _ => bad_in(&mut mismatches, "mp_via_lemma disagrees with oracle".into(), a),
        }
        // star duality: a is dual core invertible iff a* is core
        // invertible, with a_(#) = (a*)^(#)*
        let star_entry = table
            .entries
            .iter()
            .find(|e| e.a == a.star())
            .expect("ring is star-closed");
        let dual_from_star = star_entry.core.as_ref().map(StarMatrix::star);
        if entry.dual_core != dual_from_star {
            bad_in(&mut mismatches, "dual core differs from starred core of a*".into(), a);
        }
    }
    // equivalence chains over the full inner-inverse family
    for entry in &table.entries {
        let a = &entry.a;
        let family = geninv::InnerInverseFamily::new(a).enumerate();
        for chain in [
            ChainId::GroupUnits,
            ChainId::CoreUnits,
            ChainId::KCore,
            ChainId::DedekindCore,
            ChainId::Chen,
            ChainId::OneSidedMp,
            ChainId::MpUnits,
            ChainId::RangeRight,
            ChainId::RangeLeft,
        ] {
            let gs: Vec<StarMatrix> = if chain.requires_one_three() {
                family
                    .iter()
                    .filter(|g| axioms_hold(InverseKind::OneThree, a, g))
                    .cloned()
                    .collect()
            } else {
                family.clone()
            };
            if let Some(v) = chain_violation(chain, a, &gs, &[1, 2, 3]) {
                mismatches.push(Violation {
                    detail: format!("chain {chain:?}: {}", v.detail),
                    matrices: v.matrices,
                });
            }
        }
        // projection invariance: a a^(1,3) and a^(1,4) a are independent
        // of the witness chosen
        let p13: Vec<StarMatrix> = family
            .iter()
            .filter(|g| axioms_hold(InverseKind::OneThree, a, g))
            .map(|g| a.mul(g).unwrap())
            .collect();
        if p13.windows(2).any(|w| w[0] != w[1]) {
            bad_in(&mut mismatches, "a a^(1,3) depends on the witness".into(), a);
        }
        let p14: Vec<StarMatrix> = family
            .iter()
            .filter(|g| axioms_hold(InverseKind::OneFour, a, g))
            .map(|g| g.mul(a).unwrap())
            .collect();
        if p14.windows(2).any(|w| w[0] != w[1]) {
            bad_in(&mut mismatches, "a^(1,4) a depends on the witness".into(), a);
        }
    }
    ComparisonReport {
        elements_checked: table.entries.len(),
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_table_sanity() {
        let t = build_oracle(2, 2).unwrap();
        assert_eq!(t.counts.elements, 16);
        assert_eq!(t.counts.units, 6); // |GL_2(F_2)|
        // units admit everything
        for e in &t.entries {
            if e.a.try_inverse().is_some() {
                assert!(e.core.is_some() && e.dual_core.is_some() && e.mp.is_some());
            }
        }
        // zero is its own every-inverse
        let zero = &t.entries[0];
        assert!(zero.a.is_zero());
        assert_eq!(zero.core.as_ref(), Some(&zero.a));
    }

    #[test]
    fn budget_guard() {
        assert!(build_oracle(101, 2).is_err());
        assert!(all_matrices(FieldSpec::Q, 2).is_err());
    }
}
