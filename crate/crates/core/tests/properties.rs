use std::sync::OnceLock;

use hall_core::classical;
use hall_core::engine::{Backend, Basis, ClassicalGeneric, Engine, KClass, QuiverAtQ, H};
use hall_core::exactnum::{LaurentPoly, QrtScalar};
use hall_core::partitions::{partitions_up_to, Partition};
use hall_core::quiverrep::{IsoLabel, Quiver};
use proptest::prelude::*;

fn classical_engine() -> &'static Engine<ClassicalGeneric> {
    static E: OnceLock<Engine<ClassicalGeneric>> = OnceLock::new();
    E.get_or_init(|| Engine::new(ClassicalGeneric::default()))
}

fn a2_engine() -> &'static Engine<QuiverAtQ> {
    static E: OnceLock<Engine<QuiverAtQ>> = OnceLock::new();
    E.get_or_init(|| Engine::new(QuiverAtQ::from_quiver(&Quiver::a2(), 3, false).unwrap()))
}

fn a2_labels() -> &'static [IsoLabel] {
    static L: OnceLock<Vec<IsoLabel>> = OnceLock::new();
    L.get_or_init(|| a2_engine().labels_of_total_at_most(2).unwrap())
}

fn small_partitions() -> &'static [Partition] {
    static P: OnceLock<Vec<Partition>> = OnceLock::new();
    P.get_or_init(|| partitions_up_to(2))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -2i64..=2), 0..3).prop_map(|ts| {
        ts.into_iter()
            .fold(LaurentPoly::zero(), |acc, (c, e)| &acc + &LaurentPoly::monomial(c, e))
    })
}

fn classical_elem() -> impl Strategy<Value = H<ClassicalGeneric>> {
    let n = small_partitions().len();
    prop::collection::vec((0..n, laurent()), 1..3).prop_map(|ts| {
        let e = classical_engine();
        ts.into_iter().fold(H::<ClassicalGeneric>::new(), |acc, (i, c)| {
            acc.plus(&e.basis(small_partitions()[i].clone()).scale(&c))
        })
    })
}

fn a2_elem() -> impl Strategy<Value = H<QuiverAtQ>> {
    let n = a2_labels().len();
    prop::collection::vec((0..n, -2i64..=2, -1i64..=1, -1i64..=1), 1..3).prop_map(|ts| {
        let e = a2_engine();
        ts.into_iter().fold(H::<QuiverAtQ>::new(), |acc, (i, c, k0, k1)| {
            let b = e.basis_k(a2_labels()[i].clone(), KClass(vec![k0, k1]));
            acc.plus(&b.scale(&QrtScalar::from_int(3, c)))
        })
    })
}

fn partition_up_to(n: u32) -> impl Strategy<Value = Partition> {
    let all = partitions_up_to(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laurent_render_roundtrip(p in laurent()) {
        prop_assert_eq!(LaurentPoly::parse(&p.render("t"), 't').unwrap(), p);
    }

    #[test]
    fn hall_poly_is_symmetric(nu in partition_up_to(5), mu in partition_up_to(3), lambda in partition_up_to(3)) {
        prop_assert_eq!(
            classical::hall_poly(&nu, &mu, &lambda).unwrap(),
            classical::hall_poly(&nu, &lambda, &mu).unwrap()
        );
    }

    #[test]
    fn classical_associative_and_commutative(x in classical_elem(), y in classical_elem(), z in classical_elem()) {
        let e = classical_engine();
        let xy = e.multiply(&x, &y).unwrap();
        prop_assert_eq!(&xy, &e.multiply(&y, &x).unwrap());
        prop_assert_eq!(e.multiply(&xy, &z).unwrap(), e.multiply(&x, &e.multiply(&y, &z).unwrap()).unwrap());
    }

    #[test]
    fn classical_coproduct_is_multiplicative(x in classical_elem(), y in classical_elem()) {
        let e = classical_engine();
        prop_assert!(e.green_compat_residual(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn classical_symfun_is_an_algebra_map(x in partition_up_to(3), y in partition_up_to(2)) {
        let (gx, gy) = (classical::GenericHallElement::basis(x), classical::GenericHallElement::basis(y));
        let lhs = classical::to_symfun(&classical::mult_generic(&gx, &gy)).unwrap();
        let rhs = classical::to_symfun(&gx).unwrap().mul(&classical::to_symfun(&gy).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn a2_associative(x in a2_elem(), y in a2_elem(), z in a2_elem()) {
        let e = a2_engine();
        let lhs = e.multiply(&e.multiply(&x, &y).unwrap(), &z).unwrap();
        let rhs = e.multiply(&x, &e.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn a2_extended_coproduct_is_multiplicative(x in a2_elem(), y in a2_elem()) {
        let e = a2_engine();
        prop_assert!(e.green_compat_residual_extended(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn a2_antipode_is_anti_multiplicative_and_invertible(x in a2_elem(), y in a2_elem()) {
        let e = a2_engine();
        let lhs = e.antipode(&e.multiply(&x, &y).unwrap()).unwrap();
        let rhs = e.multiply(&e.antipode(&y).unwrap(), &e.antipode(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(e.antipode_inv(&e.antipode(&x).unwrap()).unwrap(), x.clone());
        prop_assert_eq!(e.antipode(&e.antipode_inv(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn a2_weights_are_additive(i in 0..6usize, j in 0..6usize, k0 in -2i64..=2, k1 in -2i64..=2) {
        let e = a2_engine();
        let (li, lj) = (&a2_labels()[i % a2_labels().len()], &a2_labels()[j % a2_labels().len()]);
        let x = e.basis_k(li.clone(), KClass(vec![k0, k1]));
        let y = e.basis(lj.clone());
        let w = &e.backend().weight(li) + &e.backend().weight(lj);
        for (b, _) in e.multiply(&x, &y).unwrap().terms() {
            let b: &Basis<IsoLabel> = b;
            prop_assert_eq!(e.backend().weight(&b.label), w.clone());
            prop_assert_eq!(&b.k, &KClass(vec![k0, k1]));
        }
        for ((l, r), _) in e.comultiply(&x).unwrap().terms() {
            prop_assert_eq!(&e.backend().weight(&l.label) + &e.backend().weight(&r.label), e.backend().weight(li));
        }
    }

    #[test]
    fn a2_pairing_is_hopf(x in a2_elem(), y in a2_elem(), z in a2_elem()) {
        let e = a2_engine();
        let lhs = e.pairing(&e.multiply(&x, &y).unwrap(), &z).unwrap();
        let rhs = e.tensor_pairing(&e.tensor_of(&x, &y), &e.comultiply(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
