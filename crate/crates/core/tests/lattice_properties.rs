mod common;

use common::{bareiss_determinant, bareiss_rank};
use jacobi::free_algebra::beta_tilde;
use jacobi::group_ring::random_element;
use jacobi::jacobi::is_jacobi_bruteforce;
use jacobi::lattice::{hermite_normal_form, jacobi_lattice_basis, omega_matrix, IntegerMatrix};
use jacobi::perm::{factorial, symmetric_group};
use jacobi::GroupRingElement;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

#[test]
fn bareiss_oracle_sanity() {
    assert_eq!(bareiss_determinant(m(&[&[2, 1], &[7, 4]])), BigInt::from(1));
    assert_eq!(bareiss_determinant(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
    assert_eq!(
        bareiss_determinant(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])),
        BigInt::from(2 * (3 - 2) + (1 - 3))
    );
    assert_eq!(bareiss_rank(m(&[&[1, 2], &[2, 4]])), 1);
    assert_eq!(bareiss_rank(m(&[&[0, 0, 1], &[0, 0, 2], &[0, 1, 0]])), 2);
}

/// Row σ is the free-algebra expansion of the single bracket σ.
fn expansion_matrix(n: usize) -> Vec<Vec<BigInt>> {
    symmetric_group(n)
        .unwrap()
        .into_iter()
        .map(|s| {
            let poly = beta_tilde(&GroupRingElement::monomial(s, 1));
            let mut row = vec![BigInt::from(0); factorial(n)];
            for (w, c) in poly.terms() {
                row[w.lex_rank()] = c.clone();
            }
            row
        })
        .collect()
}

#[test]
fn ranks_complement_each_other() {
    for n in 1..=5 {
        let omega_rank = omega_matrix(n).unwrap().rank();
        assert_eq!(bareiss_rank(expansion_matrix(n)), omega_rank);
        assert_eq!(omega_rank, factorial(n - 1));
        assert_eq!(jacobi_lattice_basis(n).unwrap().rank() + omega_rank, factorial(n));
    }
}

#[test]
fn transform_is_unimodular() {
    for n in 2..=5 {
        let mat = omega_matrix(n).unwrap();
        let (h, u) = hermite_normal_form(&mat);
        assert_eq!(u.mul(&mat).unwrap(), h);
        let det = bareiss_determinant(u.rows().map(|r| r.to_vec()).collect());
        assert!(det == BigInt::from(1) || det == BigInt::from(-1), "n={n}: det {det}");
        assert_eq!(hermite_normal_form(&h).0, h);
    }
}

#[test]
fn membership_matches_bruteforce() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a77);
    for n in 2..=5 {
        let basis = jacobi_lattice_basis(n).unwrap();
        for b in basis.basis() {
            assert!(is_jacobi_bruteforce(b));
            assert!(basis.contains(b).unwrap());
        }
        for _ in 0..1000 {
            let a = random_element(n, &mut rng).unwrap();
            assert_eq!(basis.contains(&a).unwrap(), is_jacobi_bruteforce(&a));
        }
        // random lattice points, and their translates by a non-lattice vector
        for _ in 0..50 {
            let mut point = GroupRingElement::zero(n).unwrap();
            for b in basis.basis() {
                point = point.add(&b.scale(&BigInt::from(rng.gen_range(-4..=4)))).unwrap();
            }
            assert!(basis.contains(&point).unwrap());
            assert!(is_jacobi_bruteforce(&point));
            let off = point.add(&GroupRingElement::one(n).unwrap()).unwrap();
            assert!(!basis.contains(&off).unwrap());
        }
    }
}

#[test]
fn lattice_is_a_left_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in 2..=4 {
        let basis = jacobi_lattice_basis(n).unwrap();
        let group = symmetric_group(n).unwrap();
        for _ in 0..30 {
            let mut a = GroupRingElement::zero(n).unwrap();
            let mut b = GroupRingElement::zero(n).unwrap();
            for v in basis.basis() {
                a = a.add(&v.scale(&BigInt::from(rng.gen_range(-2..=2)))).unwrap();
                b = b.add(&v.scale(&BigInt::from(rng.gen_range(-2..=2)))).unwrap();
            }
            let k = BigInt::from(rng.gen_range(-5..=5));
            assert!(is_jacobi_bruteforce(&a.add(&b).unwrap()));
            assert!(is_jacobi_bruteforce(&a.scale(&k)));
            let tau = &group[rng.gen_range(0..group.len())];
            let moved = a.translate(tau).unwrap();
            assert!(is_jacobi_bruteforce(&moved));
            assert!(basis.contains(&moved).unwrap());
            // and by any element of the ring, on the left
            let r = random_element(n, &mut rng).unwrap();
            assert!(basis.contains(&r.multiply(&a).unwrap()).unwrap());
        }
    }
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hnf_contract(rows in small_matrix()) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let mat = IntegerMatrix::from_i64_rows(&refs).unwrap();
        let (h, u) = hermite_normal_form(&mat);
        prop_assert_eq!(&u.mul(&mat).unwrap(), &h);
        let det = bareiss_determinant(u.rows().map(|r| r.to_vec()).collect());
        prop_assert!(det == BigInt::from(1) || det == BigInt::from(-1));
        prop_assert_eq!(&hermite_normal_form(&h).0, &h);
        prop_assert_eq!(mat.rank(), bareiss_rank(m(&refs)));

        // echelon shape, positive pivots, reduced entries above pivots, zero rows last
        let mut last = None;
        let mut seen_zero = false;
        for r in 0..h.num_rows() {
            match h.row(r).iter().position(|x| *x != BigInt::from(0)) {
                None => seen_zero = true,
                Some(c) => {
                    prop_assert!(!seen_zero);
                    prop_assert!(last.map_or(true, |l| c > l));
                    last = Some(c);
                    let pivot = h.get(r, c);
                    prop_assert!(*pivot > BigInt::from(0));
                    for above in 0..r {
                        let x = h.get(above, c);
                        prop_assert!(*x >= BigInt::from(0) && x < pivot);
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_is_exact_and_saturated(rows in small_matrix()) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let mat = IntegerMatrix::from_i64_rows(&refs).unwrap();
        let kernel = jacobi::lattice::kernel_basis(&mat);
        prop_assert_eq!(kernel.len(), mat.num_rows() - mat.rank());
        if !kernel.is_empty() {
            let k = IntegerMatrix::from_rows(kernel.clone(), mat.num_rows()).unwrap();
            let prod = k.mul(&mat).unwrap();
            prop_assert!(prod.rows().all(|r| r.iter().all(|x| *x == BigInt::from(0))));
            // Saturated iff the columns of the kernel matrix generate ℤ^rank,
            // i.e. the row HNF of its transpose starts with an identity block.
            let transposed: Vec<Vec<BigInt>> = (0..k.num_cols())
                .map(|c| (0..k.num_rows()).map(|r| k.get(r, c).clone()).collect())
                .collect();
            let tm = IntegerMatrix::from_rows(transposed, k.num_rows()).unwrap();
            let (ht, _) = hermite_normal_form(&tm);
            for i in 0..kernel.len() {
                for j in 0..kernel.len() {
                    let expected = BigInt::from(if i == j { 1 } else { 0 });
                    prop_assert_eq!(ht.get(i, j), &expected);
                }
            }
        }
    }
}
