use matching_harmonics::symfunc::enumerate_partitions;
use matching_harmonics::{QPoly, SchurSeries};
use matching_harmonics_cli::render::{qpoly_from_json, qpoly_to_json, series_from_json, series_to_json};
use num_bigint::BigInt;
use proptest::prelude::*;

fn big() -> impl Strategy<Value = BigInt> {
    (any::<i64>(), 0u32..4).prop_map(|(x, k)| BigInt::from(x) * BigInt::from(10u64).pow(9 * k))
}

fn series() -> impl Strategy<Value = SchurSeries> {
    (0usize..=8).prop_flat_map(|n| {
        let count = enumerate_partitions(n).len();
        proptest::collection::vec((0usize..5, 0..count, big()), 0..12).prop_map(move |terms| {
            let parts = enumerate_partitions(n);
            let mut s = SchurSeries::zero(n);
            for (q, i, c) in terms {
                s.add_term(q, parts[i].clone(), c).unwrap();
            }
            s
        })
    })
}

proptest! {
    #[test]
    fn series_survive_json(s in series()) {
        let text = serde_json::to_string(&series_to_json(&s)).unwrap();
        let back = series_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn polynomials_survive_json(coeffs in proptest::collection::vec(big(), 0..20)) {
        let p = QPoly::new(coeffs);
        let text = serde_json::to_string(&qpoly_to_json(&p)).unwrap();
        let back = qpoly_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}
