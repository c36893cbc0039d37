//! Character formulas against spans and commutants over the whole small envelope.

use superschur::exact_linalg::Arithmetic;
use superschur::schur_centralizers::{verify_dimensions, RunOptions};

#[test]
fn dimension_oracles_agree() {
    let exact = RunOptions {
        mode: Arithmetic::Exact,
        seed: 0,
    };
    let mut cases: Vec<(usize, usize, usize)> = Vec::new();
    for k in 0..=2 {
        for l in 0..=2 {
            if k + l > 0 {
                cases.extend((2..=5).map(|n| (k, l, n)));
            }
        }
    }
    cases.push((1, 1, 6));
    for (k, l, n) in cases {
        let (report, row) = verify_dimensions(k, l, n, &exact).unwrap();
        let failures: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert!(failures.is_empty(), "({k},{l},{n}): {failures:?}");
        for e in [&row.image_s, &row.image_a, &row.centralizer_s, &row.centralizer_a] {
            assert_eq!(e.agrees(), Some(true), "({k},{l},{n})");
        }
    }
}
