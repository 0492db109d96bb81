use num_bigint::BigInt;
use num_traits::{One, Zero};
use pdr_core::tableau::standard_tableaux;
use pdr_core::weyl::{type_a_characters, MolienData};
use pdr_core::{
    fake_degree_qhook, kostka_foulkes, kostka_from_fake_degree, partitions_of, pn_series, springer,
    syt_major_index_genfun, KostkaTable, LaurentPoly, Partition, WeylType,
};

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[test]
fn fake_degree_three_ways() {
    for n in 1..=8u32 {
        for lambda in partitions_of(n) {
            let by_charge = kostka_foulkes(&lambda, &Partition::column(n)).unwrap();
            let by_hook = kostka_from_fake_degree(&lambda);
            assert_eq!(by_charge, by_hook, "{lambda}");
            assert_eq!(
                syt_major_index_genfun(&lambda),
                fake_degree_qhook(&lambda),
                "{lambda}"
            );
        }
    }
}

#[test]
fn kostka_polynomials_are_monic_of_the_right_degree() {
    for n in 1..=7u32 {
        let table = KostkaTable::compute(n);
        table.validate().unwrap();
        for ((lambda, mu), k) in &table.entries {
            assert!(k.is_monic(), "{lambda} {mu}");
            let deg = mu.n_stat() as i64 - lambda.n_stat() as i64;
            assert_eq!(k.max_exp(), Some(deg), "{lambda} {mu}");
        }
    }
}

/// `sum_lambda K_{lambda,mu}(1) f^lambda` is the dimension of the permutation
/// module `Ind_{S_mu}^{S_n} 1`, a multinomial coefficient.
#[test]
fn kostka_numbers_decompose_permutation_modules() {
    for n in 1..=7u32 {
        let table = KostkaTable::compute(n);
        for mu in partitions_of(n) {
            let total = partitions_of(n).iter().fold(BigInt::zero(), |acc, lambda| {
                acc + table.get(lambda, &mu).eval_at_one() * lambda.num_standard_tableaux()
            });
            let denom: BigInt = mu.parts().iter().map(|&m| factorial(m)).product();
            assert_eq!(total, factorial(n) / denom, "{mu}");
        }
    }
}

#[test]
fn standard_tableaux_match_hook_formula() {
    for n in 1..=7u32 {
        for lambda in partitions_of(n) {
            assert_eq!(
                BigInt::from(standard_tableaux(&lambda).len()),
                lambda.num_standard_tableaux()
            );
        }
    }
}

#[test]
fn molien_agrees_with_closed_forms_for_n_up_to_seven() {
    for n in 1..=7usize {
        let data = MolienData::new(&WeylType::symmetric(n).unwrap(), 0).unwrap();
        for lambda in partitions_of(n as u32) {
            let fd = data.fake_degree(&type_a_characters(&lambda)).unwrap();
            assert_eq!(fd, fake_degree_qhook(&lambda), "{lambda}");
        }
        assert_eq!(data.pn_series().unwrap(), pn_series(n as u32).poly);
    }
}

/// Hilbert series of the coinvariant algebra: `sum f^lambda FD_lambda` is
/// `[n]_q!`.
#[test]
fn fake_degrees_weighted_by_dimension_give_q_factorial() {
    for n in 1..=7u32 {
        let total: LaurentPoly = partitions_of(n)
            .iter()
            .map(|l| fake_degree_qhook(l).scale(&l.num_standard_tableaux()))
            .sum();
        let q_fact: LaurentPoly = (1..=n).map(LaurentPoly::q_integer).product();
        assert_eq!(total, q_fact);
    }
}

#[test]
fn orbit_dimension_two_ways() {
    for n in 1..=10u32 {
        for lambda in partitions_of(n) {
            let o = springer::OrbitLabel::new(lambda.clone());
            assert_eq!(o.dim(), o.dim_from_n_stat());
            assert!(o.dim() <= 2 * o.flag_dim());
        }
        assert_eq!(
            springer::orbit_dim(&Partition::row(n)),
            (n * (n - 1)) as u64
        );
        assert_eq!(springer::orbit_dim(&Partition::column(n)), 0);
    }
}

#[test]
fn walg_series_start_with_hp0() {
    for n in 2..=5u32 {
        for phi in partitions_of(n) {
            let hp0 = springer::hp0_slice_series(&phi);
            let top = hp0.max_exp().unwrap() as usize;
            let s = springer::hp0_walg_full_series(&phi, top + 6);
            // Below degree 4 the invariant factors contribute nothing.
            for m in 0..4.min(top + 1) {
                assert_eq!(s.coeff(m), hp0.coeff(m as i64), "{phi} {m}");
            }
            assert!(s.coeff(0).is_one());
        }
    }
}

#[test]
fn tableau_counts_agree() {
    for n in 1..=7u32 {
        for lambda in partitions_of(n) {
            let f = lambda.num_standard_tableaux();
            let ssyt = pdr_core::ssyt_enumerate(&lambda, &Partition::column(n)).unwrap();
            assert_eq!(BigInt::from(ssyt.len()), f, "{lambda}");
            assert_eq!(syt_major_index_genfun(&lambda).eval_at_one(), f);
            assert_eq!(springer::hp0_slice_series(&lambda).eval_at_one(), f);
            for mu in partitions_of(n) {
                let count = pdr_core::ssyt_enumerate(&lambda, &mu).unwrap().len();
                assert_eq!(
                    kostka_foulkes(&lambda, &mu).unwrap().eval_at_one(),
                    BigInt::from(count)
                );
            }
        }
    }
}

/// `P_N(x, 1)` is the Poincare polynomial of the flag variety.
#[test]
fn pn_at_y_one_is_flag_cohomology() {
    for n in 1..=7u32 {
        let p = pn_series(n).poly;
        let flag: LaurentPoly = (2..=n)
            .map(|k| LaurentPoly::q_integer(k).substitute_power(2).unwrap())
            .product();
        assert_eq!(p.eval_y_at_one(), flag.with_var("x"));
        assert!(p
            .terms()
            .all(|((x, y), c)| x >= 0 && y <= 0 && *c > BigInt::zero()));
    }
}

#[test]
fn empty_partition_is_a_point() {
    let empty = Partition::empty();
    assert!(kostka_foulkes(&empty, &empty).unwrap().is_one());
    assert!(fake_degree_qhook(&empty).is_one());
    assert_eq!(springer::orbit_dim(&empty), 0);
    assert!(springer::hp0_slice_series(&empty).is_one());
    assert!(springer::ih_orbit_closure(&empty).is_one());
    assert_eq!(pn_series(0).poly, pdr_core::BiLaurentPoly::one());
    assert_eq!(
        springer::springer_fiber_series(&empty).poly,
        pdr_core::BiLaurentPoly::one()
    );
}
