use num_bigint::BigInt;
use proptest::prelude::*;

use fplwb_core::algebra::{unitriangular_inverse, DyckOrder, ExactMatrix, PolynomialTable};
use fplwb_core::fpl::{
    enumerate_fpl, link_pattern, pattern_census, reflect, wieland, wieland_inverse, Parity,
    PatternCensus,
};
use fplwb_core::poly::ExactPolynomial;
use fplwb_core::tableaux::{ssyt_enumerate, ssyt_polynomial};
use fplwb_core::tfpl::{t_table, TTable};
use fplwb_core::words::{enumerate_dyck, BinaryWord, FerrersDiagram, LinkPattern};

fn balanced(max_n: usize) -> impl Strategy<Value = BinaryWord> {
    (1..=max_n).prop_flat_map(|n| {
        Just([vec![0u8; n], vec![1u8; n]].concat())
            .prop_shuffle()
            .prop_map(BinaryWord::from_bits)
    })
}

fn dyck(max_n: usize) -> impl Strategy<Value = BinaryWord> {
    (1..=max_n).prop_flat_map(|n| {
        let words = enumerate_dyck(n);
        (0..words.len()).prop_map(move |i| words[i].clone())
    })
}

fn dyck_pair(max_n: usize) -> impl Strategy<Value = (BinaryWord, BinaryWord)> {
    (1..=max_n).prop_flat_map(|n| {
        let words = enumerate_dyck(n);
        let k = words.len();
        (0..k, 0..k).prop_map(move |(i, j)| (words[i].clone(), words[j].clone()))
    })
}

fn parity() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Odd), Just(Parity::Even)]
}

proptest! {
    #[test]
    fn words_print_and_parse_back(w in balanced(8)) {
        prop_assert_eq!(w.to_string().parse::<BinaryWord>().unwrap(), w);
    }

    #[test]
    fn conjugation_is_an_involution_that_transposes(w in balanced(8)) {
        prop_assert_eq!(w.conjugate().conjugate(), w.clone());
        prop_assert_eq!(w.conjugate().degree(), w.degree());
        let nonzero = |v: Vec<usize>| v.into_iter().filter(|&x| x > 0).collect::<Vec<_>>();
        prop_assert_eq!(
            nonzero(w.conjugate().diagram().rows().to_vec()),
            nonzero(w.diagram().column_lengths())
        );
    }

    #[test]
    fn degree_counts_diagram_boxes(w in balanced(8)) {
        prop_assert_eq!(w.degree(), w.diagram().size());
        prop_assert_eq!(w.diagram().to_word(), w);
    }

    #[test]
    fn dyck_words_and_matchings_correspond(w in dyck(7)) {
        let m = w.to_matching().unwrap();
        prop_assert_eq!(m.to_dyck().unwrap(), w.clone());
        prop_assert_eq!(m.size(), w.len() / 2);
        let nested = w.nest(2);
        prop_assert!(nested.is_dyck());
        prop_assert_eq!(nested.to_matching().unwrap(), m.nest(2).unwrap());
    }

    #[test]
    fn lexicographic_order_extends_inclusion((a, b) in dyck_pair(5)) {
        if a.leq(&b).unwrap() {
            prop_assert!(a <= b);
            prop_assert!(a.degree() <= b.degree());
            prop_assert!(a.conjugate().leq(&b.conjugate()).unwrap());
        }
        if a.horizontal_strip_to(&b).unwrap() {
            prop_assert!(a.leq(&b).unwrap());
        }
    }

    #[test]
    fn rotations_compose(w in dyck(6), k in 0u32..30) {
        let m = w.to_matching().unwrap();
        let modulus = 2 * m.size() as u32;
        let k = k % modulus;
        prop_assert_eq!(m.shift(k, modulus).shift(modulus - k, modulus), m.clone());
        let mut r = m.clone();
        for _ in 0..modulus {
            r = r.rotate(modulus);
        }
        prop_assert_eq!(r, m.clone());
        let text = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<LinkPattern>(&text).unwrap(), m);
    }

    #[test]
    fn hook_content_matches_fillings(w in dyck(4), bound in 0usize..4) {
        let shape: FerrersDiagram = w.diagram();
        prop_assert_eq!(
            ssyt_polynomial(&shape).eval_integer(bound as i64),
            BigInt::from(ssyt_enumerate(&shape, bound))
        );
    }

    #[test]
    fn polynomial_json_round_trips(coeffs in proptest::collection::vec(-50i64..50, 0..7), d in 1i64..7) {
        let p = ExactPolynomial::from_integers(coeffs).scale(&num_rational::BigRational::new(1.into(), d.into()));
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExactPolynomial>(&text).unwrap(), p);
    }

    #[test]
    fn unitriangular_inverse_is_exact(n in 1usize..=4, seed in proptest::collection::vec(-3i64..4, 200)) {
        let order = DyckOrder::new(n);
        let mut it = seed.into_iter().cycle();
        let words: Vec<_> = order.words().to_vec();
        let cells: Vec<Vec<i64>> = (0..words.len())
            .map(|_| (0..words.len()).map(|_| it.next().unwrap()).collect())
            .collect();
        let upper = ExactMatrix::from_fn(order.clone(), |s, t| {
            let (i, j) = (order.position(s).unwrap(), order.position(t).unwrap());
            BigInt::from(if i == j { 1 } else if i < j { cells[i][j] } else { 0 })
        });
        let inv = unitriangular_inverse(&upper).unwrap();
        prop_assert!(upper.mul(&inv).is_identity());
        prop_assert!(inv.mul(&upper).is_identity());
        let lower = upper.transpose();
        prop_assert!(lower.mul(&unitriangular_inverse(&lower).unwrap()).is_identity());
        prop_assert_eq!(ExactMatrix::from_json(&upper.to_json()).unwrap(), upper);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wieland_and_reflection_on_random_configurations(n in 1usize..=4, p in parity(), pick in any::<prop::sample::Index>()) {
        let all = enumerate_fpl(n, p);
        let f = &all[pick.index(all.len())];
        let modulus = 4 * n as u32;
        let g = wieland(f);
        prop_assert_eq!(g.parity(), p.flip());
        prop_assert_eq!(link_pattern(&g), link_pattern(f).rotate(modulus));
        prop_assert_eq!(&wieland_inverse(&g), f);
        let r = reflect(f);
        prop_assert_eq!(r.parity(), p.flip());
        prop_assert_eq!(&reflect(&r), f);
    }

    #[test]
    fn census_json_round_trips(n in 1usize..=4, p in parity()) {
        let census = pattern_census(n, p);
        prop_assert_eq!(PatternCensus::from_json(&census.to_json()).unwrap(), census);
    }

    #[test]
    fn table_json_round_trips(n in 1usize..=3) {
        let table = t_table(n).unwrap();
        prop_assert_eq!(TTable::from_json(&table.to_json()).unwrap(), table.clone());
        let polys = fplwb_core::algebra::a_polynomial_table(&table);
        prop_assert_eq!(PolynomialTable::from_json(&polys.to_json()).unwrap(), polys);
    }
}
