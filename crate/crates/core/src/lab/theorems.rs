//! Randomized theorem checking: each named statement is exercised on
//! seeded structured inputs, every claimed equivalence or identity is
//! evaluated exactly, and any violation is reported with full matrix
//! payloads for replay.

use std::fmt;

use crate::geninv::criteria::{existence_criteria, ChainId, CriterionId};
use crate::geninv::{
    self, apply_formula, core_inverse, group_inverse, group_via_units, jacobson,
    sample_one_three, FormulaError, InnerClass, InnerInverseFamily, InverseKind,
};
use crate::lab::gen::{
    gen_premise_pair, gen_with_rank, random_matrix, trial_rng, PremiseTheorem,
};
use crate::matrix::StarMatrix;
use crate::scalar::FieldSpec;

/// The checkable statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    Jacobson,
    DoubleCommute,
    ReverseOrder,
    GroupUnits,
    CoreUnits,
    KCore,
    DedekindCore,
    Chen,
    OneSidedMp,
    MpUnits,
    RangeRight,
    RangeLeft,
}

impl TheoremId {
    pub const ALL: &'static [TheoremId] = &[
        TheoremId::Jacobson,
        TheoremId::DoubleCommute,
        TheoremId::ReverseOrder,
        TheoremId::GroupUnits,
        TheoremId::CoreUnits,
        TheoremId::KCore,
        TheoremId::DedekindCore,
        TheoremId::Chen,
        TheoremId::OneSidedMp,
        TheoremId::MpUnits,
        TheoremId::RangeRight,
        TheoremId::RangeLeft,
    ];

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL.iter().copied().find(|t| t.name() == s)
    }

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::Jacobson => "jacobson",
            TheoremId::DoubleCommute => "double-commute",
            TheoremId::ReverseOrder => "reverse-order",
            TheoremId::GroupUnits => "group-units",
            TheoremId::CoreUnits => "core-units",
            TheoremId::KCore => "k-core",
            TheoremId::DedekindCore => "dedekind-core",
            TheoremId::Chen => "chen",
            TheoremId::OneSidedMp => "one-sided-mp",
            TheoremId::MpUnits => "mp-units",
            TheoremId::RangeRight => "range-right",
            TheoremId::RangeLeft => "range-left",
        }
    }

    /// The equivalence chain exercised by this theorem, when it is one.
    pub fn chain(&self) -> Option<ChainId> {
        Some(match self {
            TheoremId::GroupUnits => ChainId::GroupUnits,
            TheoremId::CoreUnits => ChainId::CoreUnits,
            TheoremId::KCore => ChainId::KCore,
            TheoremId::DedekindCore => ChainId::DedekindCore,
            TheoremId::Chen => ChainId::Chen,
            TheoremId::OneSidedMp => ChainId::OneSidedMp,
            TheoremId::MpUnits => ChainId::MpUnits,
            TheoremId::RangeRight => ChainId::RangeRight,
            TheoremId::RangeLeft => ChainId::RangeLeft,
            _ => return None,
        })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A deterministic trial campaign for one theorem.
#[derive(Debug, Clone)]
pub struct TrialConfig {
    pub theorem: TheoremId,
    pub field: FieldSpec,
    pub n: usize,
    /// Ranks to draw test matrices from; ignored by the premise-pair
    /// theorems, which generate their own inputs.
    pub ranks: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    /// Exponents to try for the k-parameterized statements.
    pub k_values: Vec<u32>,
}

impl TrialConfig {
    pub fn new(theorem: TheoremId, field: FieldSpec, n: usize, trials: u64, seed: u64) -> Self {
        TrialConfig {
            theorem,
            field,
            n,
            ranks: (0..=n).collect(),
            trials,
            seed,
            k_values: vec![1, 2, 3],
        }
    }
}

/// A concrete counterexample candidate: what failed and every matrix
/// needed to replay it.
#[derive(Debug, Clone)]
pub struct Violation {
    pub detail: String,
    pub matrices: Vec<(String, StarMatrix)>,
}

impl Violation {
    fn new(detail: impl Into<String>, matrices: Vec<(String, StarMatrix)>) -> Violation {
        Violation {
            detail: detail.into(),
            matrices,
        }
    }
}

/// Aggregate result of a campaign. `premise_misses` counts trials whose
/// generated input failed the theorem's hypotheses (these neither pass nor
/// fail); `failures` holds every violation found, with trial indices.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub field: FieldSpec,
    pub n: usize,
    pub seed: u64,
    pub trials_run: u64,
    pub trials_passed: u64,
    pub premise_misses: u64,
    pub failures: Vec<(u64, Violation)>,
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem {}", self.theorem)?;
        writeln!(f, "field {} n {} seed {}", self.field, self.n, self.seed)?;
        writeln!(
            f,
            "trials {} passed {} premise-misses {} violations {}",
            self.trials_run,
            self.trials_passed,
            self.premise_misses,
            self.failures.len()
        )?;
        for (trial, v) in &self.failures {
            writeln!(f, "violation trial {trial}: {}", v.detail)?;
            for (name, m) in &v.matrices {
                writeln!(f, "{name}:")?;
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl TheoremReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

enum TrialOutcome {
    Pass,
    PremiseMiss,
    Fail(Violation),
}

/// Run the campaign described by `config`. Each trial derives its own RNG
/// from (seed, trial index), so reports are reproducible and insensitive
/// to trial order.
pub fn run_trials(config: &TrialConfig) -> TheoremReport {
    let mut report = TheoremReport {
        theorem: config.theorem,
        field: config.field,
        n: config.n,
        seed: config.seed,
        trials_run: 0,
        trials_passed: 0,
        premise_misses: 0,
        failures: Vec::new(),
    };
    for t in 0..config.trials {
        report.trials_run += 1;
        match run_one(config, t) {
            TrialOutcome::Pass => report.trials_passed += 1,
            TrialOutcome::PremiseMiss => report.premise_misses += 1,
            TrialOutcome::Fail(v) => report.failures.push((t, v)),
        }
    }
    report
}

fn run_one(config: &TrialConfig, trial: u64) -> TrialOutcome {
    use rand::Rng;
    let mut rng = trial_rng(config.seed, trial);
    let sub_seed: u64 = rng.gen();
    match config.theorem {
        TheoremId::Jacobson => {
            let a = random_matrix(config.field, config.n, &mut rng);
            let b = random_matrix(config.field, config.n, &mut rng);
            match jacobson(&a, &b) {
                Ok(_) => TrialOutcome::Pass, // identity asserted inside
                Err(_) => TrialOutcome::PremiseMiss,
            }
        }
        TheoremId::DoubleCommute => {
            match gen_premise_pair(PremiseTheorem::DoubleCommute, config.field, config.n, sub_seed)
            {
                Ok((a, b, x)) => match check_double_commute(&a, &b, &x.unwrap(), sub_seed) {
                    None => TrialOutcome::Pass,
                    Some(v) => TrialOutcome::Fail(v),
                },
                Err(_) => TrialOutcome::PremiseMiss,
            }
        }
        TheoremId::ReverseOrder => {
            match gen_premise_pair(PremiseTheorem::ReverseOrder, config.field, config.n, sub_seed)
            {
                Ok((a, b, _)) => match check_reverse_order(&a, &b) {
                    None => TrialOutcome::Pass,
                    Some(v) => TrialOutcome::Fail(v),
                },
                Err(_) => TrialOutcome::PremiseMiss,
            }
        }
        _ => {
            let chain = config.theorem.chain().expect("chain theorem");
            let r = config.ranks[rng.gen_range(0..config.ranks.len())];
            let a = gen_with_rank(config.field, config.n, r, sub_seed);
            let gs = witness_inner_inverses(chain, &a, sub_seed);
            match chain_violation(chain, &a, &gs, &config.k_values) {
                None => TrialOutcome::Pass,
                Some(v) => TrialOutcome::Fail(v),
            }
        }
    }
}

/// The inner-inverse witnesses a chain check is run against. Chains whose
/// conditions demand a {1,3}-inverse get seeded {1,3}-samples; the
/// existential chain gets assorted inner inverses plus the canonical
/// {1,3}-inverse (needed for soundness of the OR evaluation); the rest get
/// assorted inner inverses.
pub fn witness_inner_inverses(chain: ChainId, a: &StarMatrix, seed: u64) -> Vec<StarMatrix> {
    let mut gs: Vec<StarMatrix> = Vec::new();
    let push = |g: StarMatrix, gs: &mut Vec<StarMatrix>| {
        if !gs.contains(&g) {
            gs.push(g);
        }
    };
    if chain.requires_one_three() {
        for i in 0..3u64 {
            if let Some(g) = sample_one_three(a, seed.wrapping_add(i)) {
                push(g, &mut gs);
            }
        }
    } else {
        let fam = InnerInverseFamily::new(a);
        push(fam.canonical(), &mut gs);
        for i in 0..2u64 {
            push(fam.sample(seed.wrapping_add(i)), &mut gs);
        }
        if chain.existential() {
            if let Ok(c) = geninv::one_three(a) {
                push(c.value, &mut gs);
            }
        }
    }
    gs
}

fn all_equal(vals: &[bool]) -> bool {
    vals.iter().all(|&v| v == vals[0])
}

/// Check one equivalence chain on `a` against the witness set `gs`.
///
/// Per-fixed-witness chains must have all conditions agree for every
/// (g, k); the existential chain ORs each unit condition over `gs` (which
/// the caller must have made rich enough, e.g. by including the canonical
/// {1,3}-inverse or the full family). When the conditions hold, every
/// representation formula of the chain's inverse kind whose class premise
/// is met is evaluated; a successful evaluation must reproduce the
/// canonical inverse, and for the group chain the unit formula must
/// succeed outright.
pub fn chain_violation(
    chain: ChainId,
    a: &StarMatrix,
    gs: &[StarMatrix],
    ks: &[u32],
) -> Option<Violation> {
    let ks: &[u32] = if chain.uses_k() { ks } else { &[1] };
    let base = existence_criteria(a, CriterionId { chain, cond: 0 }, None, 1)
        .expect("condition 0 needs no witness")
        .holds;
    if chain.requires_one_three() && gs.is_empty() {
        // No {1,3}-inverse exists, so every unit condition is false; the
        // solver-side condition must agree.
        if base {
            return Some(Violation::new(
                format!("{chain:?}: inverse exists but a has no (1,3)-inverse"),
                vec![("a".into(), a.clone())],
            ));
        }
        return None;
    }
    if chain.existential() {
        for k in ks {
            let mut vals = vec![base];
            for cond in 1..chain.condition_count() {
                let any = gs.iter().any(|g| {
                    existence_criteria(a, CriterionId { chain, cond }, Some(g), *k)
                        .expect("criterion eval")
                        .holds
                });
                vals.push(any);
            }
            if !all_equal(&vals) {
                return Some(Violation::new(
                    format!("{chain:?} k={k}: conditions disagree {vals:?}"),
                    vec![("a".into(), a.clone())],
                ));
            }
        }
    } else {
        for g in gs {
            for k in ks {
                let mut vals = vec![base];
                for cond in 1..chain.condition_count() {
                    let eval = existence_criteria(a, CriterionId { chain, cond }, Some(g), *k)
                        .expect("criterion eval");
                    vals.push(eval.holds);
                }
                if !all_equal(&vals) {
                    return Some(Violation::new(
                        format!("{chain:?} k={k}: conditions disagree {vals:?}"),
                        vec![("a".into(), a.clone()), ("a^-".into(), g.clone())],
                    ));
                }
                if base && chain == ChainId::GroupUnits {
                    // the unit representation must succeed and reproduce a^#
                    let grp = group_inverse(a).expect("condition 0 held").value;
                    match group_via_units(a, g, *k) {
                        Ok(cert) if cert.value == grp => {}
                        Ok(cert) => {
                            return Some(Violation::new(
                                format!("GroupUnits k={k}: unit formula disagrees with a^#"),
                                vec![
                                    ("a".into(), a.clone()),
                                    ("a^-".into(), g.clone()),
                                    ("unit form".into(), cert.value),
                                    ("a^#".into(), grp),
                                ],
                            ));
                        }
                        Err(e) => {
                            return Some(Violation::new(
                                format!("GroupUnits k={k}: unit formula failed: {e}"),
                                vec![("a".into(), a.clone()), ("a^-".into(), g.clone())],
                            ));
                        }
                    }
                }
            }
        }
    }
    if base {
        if let Some(v) = formula_consistency(chain, a, gs, ks) {
            return Some(v);
        }
    }
    None
}

/// When the chain's inverse exists, run every catalog formula of that kind
/// whose class premise the witness satisfies; each successful evaluation
/// must equal the canonical inverse.
fn formula_consistency(
    chain: ChainId,
    a: &StarMatrix,
    gs: &[StarMatrix],
    ks: &[u32],
) -> Option<Violation> {
    let kind = match chain {
        ChainId::GroupUnits => InverseKind::Group,
        ChainId::CoreUnits | ChainId::KCore | ChainId::DedekindCore => InverseKind::Core,
        ChainId::Chen | ChainId::OneSidedMp | ChainId::MpUnits => InverseKind::MoorePenrose,
        ChainId::RangeRight | ChainId::RangeLeft => return None,
    };
    let canonical = match geninv::solve(kind, a) {
        Ok(c) => c.value,
        Err(_) => return None,
    };
    for f in geninv::FormulaId::ALL {
        if f.kind() != kind {
            continue;
        }
        let class_ok = |g: &StarMatrix| match f.required_class() {
            InnerClass::Any => geninv::axioms_hold(InverseKind::Inner, a, g),
            InnerClass::OneThree => geninv::axioms_hold(InverseKind::OneThree, a, g),
            InnerClass::Mp | InnerClass::Group | InnerClass::None => false,
        };
        for g in gs.iter().filter(|g| class_ok(g)) {
            for k in if f.uses_k() { ks } else { &[1][..] } {
                if *f == geninv::FormulaId::C6 && *k < 2 {
                    continue;
                }
                match apply_formula(*f, a, Some(g), *k) {
                    Ok(Ok(cert)) if cert.value == canonical => {}
                    Ok(Ok(cert)) => {
                        return Some(Violation::new(
                            format!("{f} k={k}: formula value differs from canonical"),
                            vec![
                                ("a".into(), a.clone()),
                                ("g".into(), g.clone()),
                                ("formula".into(), cert.value),
                                ("canonical".into(), canonical.clone()),
                            ],
                        ));
                    }
                    Ok(Err(FormulaError::NonExistent(_))) => {} // unit singular for this witness
                    Ok(Err(FormulaError::PremiseViolation { equation })) => {
                        return Some(Violation::new(
                            format!("{f} k={k}: premise violation ({equation}) despite valid class"),
                            vec![("a".into(), a.clone()), ("g".into(), g.clone())],
                        ));
                    }
                    Err(e) => {
                        return Some(Violation::new(
                            format!("{f} k={k}: {e}"),
                            vec![("a".into(), a.clone()), ("g".into(), g.clone())],
                        ));
                    }
                }
            }
        }
    }
    None
}

/// Conclusions for x a = b x, x a* = b* x with a, b core invertible:
/// x commutes the core inverses across, and the induced projectors
/// a a^(1,3), b b^(1,3) commute across for arbitrary {1,3}-choices.
pub fn check_double_commute(
    a: &StarMatrix,
    b: &StarMatrix,
    x: &StarMatrix,
    seed: u64,
) -> Option<Violation> {
    let ca = core_inverse(a).expect("generator ensures core invertibility").value;
    let cb = core_inverse(b).expect("generator ensures core invertibility").value;
    if x.mul(&ca).unwrap() != cb.mul(x).unwrap() {
        return Some(Violation::new(
            "x a^(#) != b^(#) x",
            vec![
                ("a".into(), a.clone()),
                ("b".into(), b.clone()),
                ("x".into(), x.clone()),
                ("a^(#)".into(), ca),
                ("b^(#)".into(), cb),
            ],
        ));
    }
    let a13s: Vec<StarMatrix> = (0..3u64).filter_map(|i| sample_one_three(a, seed ^ i)).collect();
    let b13s: Vec<StarMatrix> = (0..3u64).filter_map(|i| sample_one_three(b, !seed ^ i)).collect();
    for a13 in &a13s {
        for b13 in &b13s {
            let lhs = x.mul(a).unwrap().mul(a13).unwrap();
            let rhs = b.mul(b13).unwrap().mul(x).unwrap();
            if lhs != rhs {
                return Some(Violation::new(
                    "x a a^(1,3) != b b^(1,3) x",
                    vec![
                        ("a".into(), a.clone()),
                        ("b".into(), b.clone()),
                        ("x".into(), x.clone()),
                        ("a^(1,3)".into(), a13.clone()),
                        ("b^(1,3)".into(), b13.clone()),
                    ],
                ));
            }
        }
    }
    None
}

/// Conclusions for a b = b a, a b* = b* a with a, b core invertible:
/// ab is core invertible, its core inverse is b^(#) a^(#) = a^(#) b^(#),
/// and each factor commutes with the other's core inverse.
pub fn check_reverse_order(a: &StarMatrix, b: &StarMatrix) -> Option<Violation> {
    let ca = core_inverse(a).expect("generator ensures core invertibility").value;
    let cb = core_inverse(b).expect("generator ensures core invertibility").value;
    let ab = a.mul(b).unwrap();
    let witness = |extra: Vec<(String, StarMatrix)>| {
        let mut m = vec![
            ("a".to_string(), a.clone()),
            ("b".to_string(), b.clone()),
            ("a^(#)".to_string(), ca.clone()),
            ("b^(#)".to_string(), cb.clone()),
        ];
        m.extend(extra);
        m
    };
    let cab = match core_inverse(&ab) {
        Ok(c) => c.value,
        Err(e) => {
            return Some(Violation::new(
                format!("ab not core invertible: {e}"),
                witness(vec![("ab".into(), ab)]),
            ))
        }
    };
    let ba_form = cb.mul(&ca).unwrap();
    let ab_form = ca.mul(&cb).unwrap();
    if cab != ba_form || cab != ab_form {
        return Some(Violation::new(
            "(ab)^(#) != b^(#) a^(#) or factors fail to commute",
            witness(vec![
                ("(ab)^(#)".into(), cab),
                ("b^(#) a^(#)".into(), ba_form),
                ("a^(#) b^(#)".into(), ab_form),
            ]),
        ));
    }
    if a.mul(&cb).unwrap() != cb.mul(a).unwrap() || b.mul(&ca).unwrap() != ca.mul(b).unwrap() {
        return Some(Violation::new(
            "factor does not commute with the other core inverse",
            witness(vec![]),
        ));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn campaign(theorem: TheoremId, field: FieldSpec, n: usize, trials: u64) -> TheoremReport {
        run_trials(&TrialConfig::new(theorem, field, n, trials, 0xC0FFEE))
    }

    #[test]
    fn jacobson_trials_clean() {
        let r = campaign(TheoremId::Jacobson, FieldSpec::Q, 3, 20);
        assert!(r.ok(), "{r}");
        assert!(r.trials_passed > 0);
    }

    #[test]
    fn premise_pair_theorems_clean() {
        for t in [TheoremId::DoubleCommute, TheoremId::ReverseOrder] {
            let r = campaign(t, FieldSpec::Q, 2, 10);
            assert!(r.ok(), "{r}");
            assert!(r.trials_passed > 0, "{r}");
        }
    }

    #[test]
    fn chain_trials_clean_over_q() {
        for t in [
            TheoremId::GroupUnits,
            TheoremId::CoreUnits,
            TheoremId::KCore,
            TheoremId::DedekindCore,
            TheoremId::Chen,
            TheoremId::OneSidedMp,
            TheoremId::MpUnits,
            TheoremId::RangeRight,
            TheoremId::RangeLeft,
        ] {
            let r = campaign(t, FieldSpec::Q, 2, 8);
            assert!(r.ok(), "{r}");
        }
    }

    #[test]
    fn chain_trials_clean_over_f5() {
        let f5 = FieldSpec::fp(5).unwrap();
        for t in [TheoremId::CoreUnits, TheoremId::Chen, TheoremId::MpUnits] {
            let r = campaign(t, f5, 2, 8);
            assert!(r.ok(), "{r}");
        }
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::parse(t.name()), Some(*t));
        }
        assert_eq!(TheoremId::parse("nonsense"), None);
    }
}
