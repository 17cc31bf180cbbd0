use std::collections::BTreeMap;

use matching_harmonics::loci::{conjugate_involution, enumerate, locus_size};
use matching_harmonics::repr::{
    cached_table, decompose_class_function, kronecker_multiplicities, schur_to_class_function,
};
use matching_harmonics::rsk::{count_syt, lds, odd_column_count, schensted, PermutationWord};
use matching_harmonics::symfunc::{enumerate_partitions, horizontal_strips, pieri_multiply};
use matching_harmonics::{FirstRow, Involution, LocusKind, LocusSpec, Partition, SchurSeries};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = PermutationWord> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| PermutationWord::new(v).unwrap())
}

fn any_permutation(max_n: usize) -> impl Strategy<Value = PermutationWord> {
    (0..=max_n).prop_flat_map(permutation)
}

/// An involution read off a shuffled `1..=n`: the first `2k` entries are
/// paired consecutively.
fn involution(max_n: usize) -> impl Strategy<Value = Involution> {
    (0..=max_n).prop_flat_map(|n| (permutation(n), 0..=n / 2)).prop_map(|(w, k)| {
        let v = w.images();
        Involution::new(v.len(), (0..k).map(|t| (v[2 * t], v[2 * t + 1]))).unwrap()
    })
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate_partitions(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn any_partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (0..=max_n).prop_flat_map(partition_of)
}

fn brute_lds(w: &PermutationWord) -> usize {
    let v = w.images();
    let mut best = vec![1; v.len()];
    for i in 0..v.len() {
        for j in 0..i {
            if v[j] > v[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Standard fillings of `λ` counted by removing corners.
fn count_by_corners(parts: &mut Vec<usize>, memo: &mut BTreeMap<Vec<usize>, BigUint>) -> BigUint {
    if parts.iter().all(|&p| p == 0) {
        return BigUint::one();
    }
    if let Some(v) = memo.get(parts) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for i in 0..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        if parts[i] > next {
            parts[i] -= 1;
            total += count_by_corners(parts, memo);
            parts[i] += 1;
        }
    }
    memo.insert(parts.clone(), total.clone());
    total
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

proptest! {
    #[test]
    fn conjugation_preserves_involutions(pair in involution(20).prop_flat_map(|w| {
        let n = w.n();
        (Just(w), permutation(n))
    })) {
        let (w, v) = pair;
        let n = w.n();
        let image = conjugate_involution(&v, &w).unwrap();
        prop_assert!(image.to_word().is_involution());
        prop_assert_eq!(image.num_fixed(), w.num_fixed());
        prop_assert_eq!(conjugate_involution(&PermutationWord::identity(n), &w).unwrap(), w.clone());
        let back = conjugate_involution(&v.inverse(), &image).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn conjugation_is_an_action(w in involution(5).prop_flat_map(|w| {
        let n = w.n();
        (Just(w), permutation(n), permutation(n))
    })) {
        let (w, u, v) = w;
        let uv = u.compose(&v).unwrap();
        let lhs = conjugate_involution(&uv, &w).unwrap();
        let rhs = conjugate_involution(&u, &conjugate_involution(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schensted_invariants(w in any_permutation(7)) {
        let (p, q) = schensted(&w);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(p.size(), w.len());
        prop_assert_eq!(lds(&w), brute_lds(&w));
        let (pi, qi) = schensted(&w.inverse());
        prop_assert_eq!(pi, q);
        prop_assert_eq!(qi, p);
    }

    #[test]
    fn involutions_have_symmetric_insertion(w in involution(9)) {
        let (p, q) = schensted(&w.to_word());
        prop_assert_eq!(&p, &q);
        prop_assert_eq!(odd_column_count(&p), w.num_fixed());
    }

    #[test]
    fn truncation_splits_a_series(n in 0usize..=9, b in 0usize..=9) {
        let s = matching_harmonics::formulas::grfrob_matchings(n);
        let low = s.truncate_first_row(FirstRow::AtMost(b));
        let high = s.truncate_first_row(FirstRow::Between(b + 1, usize::MAX));
        prop_assert_eq!(&low + &high, s);
    }

    #[test]
    fn pieri_products(lambda in any_partition(7), b in 0usize..=4) {
        let product = pieri_multiply(&SchurSeries::schur(0, lambda.clone()), b);
        prop_assert_eq!(product.degree_n(), lambda.size() + b);
        prop_assert_eq!(product.len(), horizontal_strips(&lambda, b).len());
        for (_, nu, c) in product.terms() {
            prop_assert!(c.is_one());
            prop_assert!(nu.contains(&lambda));
            prop_assert!(nu.first_row() >= b.max(lambda.first_row()));
        }
    }

    #[test]
    fn frobenius_round_trip(n in 0usize..=7, coeffs in proptest::collection::vec(-3i64..=3, 15)) {
        let table = cached_table(n).unwrap();
        let mut s = SchurSeries::zero(n);
        for (lambda, c) in table.partitions().iter().zip(coeffs) {
            s.add_term(0, lambda.clone(), BigInt::from(c)).unwrap();
        }
        let f = schur_to_class_function(&table, &s).unwrap();
        prop_assert_eq!(decompose_class_function(&table, &f).unwrap(), s);
    }

    #[test]
    fn kronecker_laws(n in 1usize..=7, i in 0usize..15, j in 0usize..15) {
        let table = cached_table(n).unwrap();
        let parts = table.partitions();
        let a = SchurSeries::schur(0, parts[i % parts.len()].clone());
        let b = SchurSeries::schur(0, parts[j % parts.len()].clone());
        let ab = kronecker_multiplicities(&table, &a, &b).unwrap();
        prop_assert_eq!(&ab, &kronecker_multiplicities(&table, &b, &a).unwrap());
        let trivial = SchurSeries::schur(0, Partition::row(n));
        prop_assert_eq!(kronecker_multiplicities(&table, &trivial, &a).unwrap(), a.clone());
        let dim = |s: &SchurSeries| -> BigInt {
            s.terms().map(|(_, l, c)| c * BigInt::from(count_syt(l))).sum()
        };
        prop_assert_eq!(dim(&ab), dim(&a) * dim(&b));
        prop_assert!(ab.is_nonnegative());
    }
}

#[test]
fn hook_length_matches_corner_recursion() {
    let mut memo = BTreeMap::new();
    for n in 0..=10 {
        let mut squares = BigUint::zero();
        for lambda in enumerate_partitions(n) {
            let f = count_syt(&lambda);
            assert_eq!(f, count_by_corners(&mut lambda.parts().to_vec(), &mut memo), "{lambda}");
            squares += &f * &f;
        }
        assert_eq!(squares, factorial(n));
    }
}

#[test]
fn locus_sizes_match_enumeration() {
    for n in 0..=10 {
        let mut specs = vec![LocusSpec::all(n)];
        if n % 2 == 0 {
            specs.push(LocusSpec::new(LocusKind::PerfectMatchings, n).unwrap());
        }
        specs.extend((0..=n).filter(|a| (n - a) % 2 == 0).map(|a| LocusSpec::new(LocusKind::FixedCount(a), n).unwrap()));
        for spec in specs {
            let points = enumerate(&spec).unwrap();
            assert_eq!(BigUint::from(points.len()), locus_size(&spec).unwrap(), "{spec}");
            assert!(points.iter().all(|w| spec.contains(w)));
            assert!(points.windows(2).all(|p| p[0] != p[1]));
        }
    }
}

#[test]
fn involution_count_via_schensted() {
    // involutions are in bijection with standard tableaux
    for n in 0..=8 {
        let tableaux: BigUint = enumerate_partitions(n).iter().map(count_syt).sum();
        assert_eq!(tableaux, locus_size(&LocusSpec::all(n)).unwrap());
    }
}

#[test]
fn character_orthogonality() {
    for n in 0..=10 {
        let table = cached_table(n).unwrap();
        let order = BigInt::from(table.group_order());
        let parts = table.partitions();
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i..] {
                let ra = table.row(a).unwrap();
                let rb = table.row(b).unwrap();
                let inner: BigInt = ra
                    .iter()
                    .zip(rb)
                    .zip(table.class_sizes())
                    .map(|((x, y), size)| BigInt::from(x * y) * BigInt::from(size.clone()))
                    .sum();
                let expected = if a == b { order.clone() } else { BigInt::zero() };
                assert_eq!(inner, expected, "n = {n}: {a} vs {b}");
            }
            let dim = table.value(a, &Partition::column(n)).unwrap();
            assert_eq!(BigUint::from(dim as u64), count_syt(a));
        }
    }
}

#[test]
fn class_function_values_are_exact() {
    let table = cached_table(6).unwrap();
    let s = matching_harmonics::formulas::grfrob_matchings(6).at_q1();
    let f = schur_to_class_function(&table, &s).unwrap();
    // the character of C[M_6] at the identity is |M_6|
    assert_eq!(f.degree(), BigRational::from_integer(BigInt::from(76)));
}
