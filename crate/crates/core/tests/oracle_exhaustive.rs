//! Full cross-validation against the brute-force ground truth over
//! M_2(F_2) and M_2(F_3): solver agreement, uniqueness, duality,
//! projection invariance, and every equivalence chain evaluated over the
//! entire inner-inverse family. The census numbers are frozen as
//! regression values.

use coreinv::lab::{build_oracle, oracle_vs_algorithms, OracleCounts};

fn run(p: u64) -> OracleCounts {
    let table = build_oracle(p, 2).unwrap();
    let report = oracle_vs_algorithms(&table);
    assert_eq!(report.elements_checked, table.counts.elements);
    if !report.ok() {
        for v in report.mismatches.iter().take(5) {
            eprintln!("mismatch: {}", v.detail);
            for (name, m) in &v.matrices {
                eprintln!("{name}:\n{m}");
            }
        }
        panic!("{} oracle mismatches over F_{p}", report.mismatches.len());
    }
    table.counts
}

#[test]
fn oracle_f2() {
    assert_eq!(
        run(2),
        OracleCounts {
            elements: 16,
            units: 6,
            one_three: 13,
            one_four: 13,
            group: 13,
            mp: 11,
            core: 11,
            dual_core: 11,
        }
    );
}

#[test]
fn oracle_f3() {
    // over F_3 the transpose involution makes every 2x2 matrix
    // star-regular, so the Moore-Penrose census covers the whole ring
    assert_eq!(
        run(3),
        OracleCounts {
            elements: 81,
            units: 48,
            one_three: 81,
            one_four: 81,
            group: 73,
            mp: 81,
            core: 73,
            dual_core: 73,
        }
    );
}
