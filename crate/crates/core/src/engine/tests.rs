use super::*;
use crate::exactnum::{LaurentPoly, RatFunc};
use crate::partitions::{partitions_of, Partition};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn a2(q: u32) -> Engine<QuiverAtQ> {
    Engine::new(QuiverAtQ::from_quiver(&Quiver::a2(), q, false).unwrap())
}

fn point(q: u32) -> Engine<QuiverAtQ> {
    Engine::new(QuiverAtQ::from_quiver(&Quiver::point(), q, false).unwrap())
}

fn nu(q: u32, e: i64) -> QrtScalar {
    QrtScalar::nu_pow(q as u64, e)
}

fn int(q: u32, n: i64) -> QrtScalar {
    QrtScalar::from_int(q as u64, n)
}

fn a2_labels(e: &Engine<QuiverAtQ>) -> (IsoLabel, IsoLabel, IsoLabel, IsoLabel) {
    let b = e.backend();
    let s1 = b.simple(0).unwrap();
    let s2 = b.simple(1).unwrap();
    let mut d11 = b.labels(&KClass(vec![1, 1])).unwrap();
    let i12 = d11.pop().unwrap();
    let split = d11.pop().unwrap();
    (s1, s2, split, i12)
}

#[test]
fn a2_products() {
    for q in [2u32, 3] {
        let e = a2(q);
        let (s1, s2, split, i12) = a2_labels(&e);
        let lhs = e.multiply(&e.basis(s1.clone()), &e.basis(s2.clone())).unwrap();
        let rhs = e.basis(split.clone()).plus(&e.basis(i12)).scale(&nu(q, -1));
        assert_eq!(lhs, rhs);
        let lhs = e.multiply(&e.basis(s2), &e.basis(s1)).unwrap();
        assert_eq!(lhs, e.basis(split));
    }
}

#[test]
fn point_powers() {
    for q in [2u32, 3] {
        let e = point(q);
        let s = e.basis(e.backend().simple(0).unwrap());
        for n in 0..=4u32 {
            let l = e.backend().labels(&KClass(vec![n as i64])).unwrap();
            assert_eq!(l.len(), 1);
            let c = nu(q, (n * (n.saturating_sub(1))) as i64)
                .try_mul(&balanced_factorial(n).eval_at_sqrt_q(q as u64))
                .unwrap();
            assert_eq!(e.power(&s, n).unwrap(), e.basis(l[0].clone()).scale(&c));
        }
    }
}

#[test]
fn coproduct_examples() {
    let e = a2(2);
    let (s1, s2, _, i12) = a2_labels(&e);
    let k = KClass(vec![1, -1]);
    let dk = e.comultiply(&e.k(k.clone())).unwrap();
    assert_eq!(dk, e.tensor_of(&e.k(k.clone()), &e.k(k)));
    let ds1 = e.comultiply(&e.basis(s1.clone())).unwrap();
    let expect = e
        .tensor_of(&e.basis(s1.clone()), &e.one())
        .plus(&e.tensor_of(&e.k(KClass(vec![1, 0])), &e.basis(s1.clone())));
    assert_eq!(ds1, expect);
    let di = e.comultiply(&e.basis(i12.clone())).unwrap();
    let expect = e
        .tensor_of(&e.basis(i12.clone()), &e.one())
        .plus(&e.tensor_of(&e.k(KClass(vec![1, 1])), &e.basis(i12)))
        .plus(
            &e.tensor_of(&e.basis_k(s1, KClass(vec![0, 1])), &e.basis(s2))
                .scale(&nu(2, -1)),
        );
    assert_eq!(di, expect);
    assert_eq!(e.counit(&e.one()), int(2, 1));
    assert!(e.counit(&e.basis(e.backend().simple(0).unwrap())).is_zero());
}

#[test]
fn pairing_examples() {
    for q in [2u32, 3, 5] {
        let e = point(q);
        let s = e.basis(e.backend().simple(0).unwrap());
        assert_eq!(
            e.pairing(&s, &s).unwrap(),
            QrtScalar::from_rational(q as u64, num_rational::BigRational::new(1.into(), (q as i64 - 1).into()))
        );
        let (a, b) = (KClass(vec![2]), KClass(vec![-1]));
        assert_eq!(e.pairing(&e.k(a), &e.k(b)).unwrap(), nu(q, -4));
    }
    let e = a2(2);
    let (s1, s2, ..) = a2_labels(&e);
    assert!(e.pairing(&e.basis(s1), &e.basis(s2)).unwrap().is_zero());
}

#[test]
fn antipode_examples() {
    let e = a2(3);
    let (s1, ..) = a2_labels(&e);
    let alpha = KClass(vec![1, 2]);
    assert_eq!(e.antipode(&e.k(alpha.clone())).unwrap(), e.k(-&alpha));
    assert_eq!(e.antipode_inv(&e.k(alpha.clone())).unwrap(), e.k(-&alpha));
    let s = e.antipode(&e.basis(s1.clone())).unwrap();
    let expect = e.multiply(&e.k(KClass(vec![-1, 0])), &e.basis(s1.clone())).unwrap().negated();
    assert_eq!(s, expect);
    let si = e.antipode_inv(&e.basis(s1.clone())).unwrap();
    assert_eq!(si, e.basis_k(s1.clone(), KClass(vec![-1, 0])).negated());
    assert_eq!(e.antipode(&si).unwrap(), e.basis(s1));

    let c = Engine::new(ClassicalGeneric::default());
    let s = c.antipode(&c.basis(p(&[1, 1]))).unwrap();
    let tinv = LaurentPoly::monomial(1, -1);
    let expect = c
        .basis_k(p(&[2]), KClass(vec![-2]))
        .plus(&c.basis_k(p(&[1, 1]), KClass(vec![-2])))
        .scale(&tinv);
    assert_eq!(s, expect);
    assert_eq!(c.antipode(&c.basis(p(&[1]))).unwrap(), c.basis_k(p(&[1]), KClass(vec![-1])).negated());
}

#[test]
fn antipode_closed_and_inverse_classical() {
    let c = Engine::new(ClassicalGeneric::default());
    for n in 0..=4 {
        for l in partitions_of(n) {
            let x = c.basis(l.clone());
            let s = c.antipode(&x).unwrap();
            assert_eq!(c.antipode_closed(&x).unwrap(), s, "λ={l}");
            assert_eq!(c.antipode_inv(&s).unwrap(), x);
            assert_eq!(c.antipode(&c.antipode_inv(&x).unwrap()).unwrap(), x);
        }
    }
}

#[test]
fn hopf_axioms_small() {
    let e = a2(2);
    for l in e.labels_of_total_at_most(3).unwrap() {
        let x = e.basis(l.clone());
        let d = e.comultiply(&x).unwrap();
        let eps = e.one().scale(&e.counit(&x));
        assert_eq!(e.mul_apply(&d, |y| Ok(y.clone()), |y| e.antipode(y)).unwrap(), eps);
        assert_eq!(e.mul_apply(&d, |y| e.antipode(y), |y| Ok(y.clone())).unwrap(), eps);
        assert_eq!(e.coproduct3(&x).unwrap(), e.coproduct3_right(&x).unwrap());
        assert_eq!(e.antipode_closed(&x).unwrap(), e.antipode(&x).unwrap(), "{l}");
    }
}

#[test]
fn green_small() {
    let e = a2(2);
    let (s1, s2, ..) = a2_labels(&e);
    assert!(e.green_compat_residual(&e.basis(s1.clone()), &e.basis(s2.clone())).unwrap().is_zero());
    assert!(e.green_compat_residual_extended(&e.basis(s1.clone()), &e.basis(s2)).unwrap().is_zero());
    assert!(e.green_compat_residual(&e.one(), &e.basis(s1)).unwrap().is_zero());
    let c = Engine::new(ClassicalGeneric::default());
    assert!(c.green_compat_residual(&c.basis(p(&[1])), &c.basis(p(&[1]))).unwrap().is_zero());
}

#[test]
fn classical_pairing_is_green() {
    let c = Engine::new(ClassicalGeneric::default());
    let x = c.basis(p(&[1, 1]));
    let expect = RatFunc::new(LaurentPoly::one(), crate::partitions::aut_poly(&p(&[1, 1]))).unwrap();
    assert_eq!(c.pairing(&x, &x).unwrap(), expect);
}

#[test]
fn serre_a2_and_kronecker() {
    for q in [2u32, 3] {
        assert!(serre_residual(&Quiver::a2(), q, 0, 1).unwrap().is_zero());
        assert!(serre_residual(&Quiver::a2(), q, 1, 0).unwrap().is_zero());
    }
    assert!(serre_residual(&Quiver::a2(), 2, 0, 0).is_err());
    let e = point(3);
    for l in 0..=3 {
        let lbl = e.backend().labels(&KClass(vec![l as i64])).unwrap().remove(0);
        let expect = e.basis(lbl).scale(&nu(3, (l * (l.max(1) - 1)) as i64));
        assert_eq!(e.divided_power(0, l).unwrap(), expect);
    }
}

#[test]
fn one_gamma_examples() {
    let e = a2(2);
    let (_, _, split, i12) = a2_labels(&e);
    assert_eq!(e.one_gamma(&KClass(vec![0, 0])).unwrap(), e.one());
    assert_eq!(
        e.one_gamma(&KClass(vec![1, 1])).unwrap(),
        e.basis(split).plus(&e.basis(i12))
    );
    let j = Engine::new(QuiverAtQ::jordan(2).unwrap());
    assert_eq!(
        j.one_gamma(&KClass(vec![2])).unwrap(),
        j.basis(IsoLabel::Partition(p(&[2]))).plus(&j.basis(IsoLabel::Partition(p(&[1, 1]))))
    );
}

#[test]
fn drinfeld_a1() {
    for q in [2u32, 3] {
        let e = point(q);
        let s = e.backend().simple(0).unwrap();
        let x = e.basis(s.clone());
        let crossed = e.drinfeld_cross(&x, &x).unwrap();
        let ordered = e.double_product(&x, &x);
        let comm = ordered.minus(&crossed);
        let zero = e.backend().zero_label();
        let c = QrtScalar::from_rational(q as u64, num_rational::BigRational::new((-1).into(), (q as i64 - 1).into()));
        let mut expect = Lin::new();
        expect.add_term(DoubleKey { plus: zero.clone(), k: KClass(vec![1]), minus: zero.clone() }, c.clone());
        expect.add_term(DoubleKey { plus: zero.clone(), k: KClass(vec![-1]), minus: zero.clone() }, -&c);
        assert_eq!(comm, expect, "{}", e.render_double(&comm));

        let one = e.one();
        assert_eq!(e.drinfeld_cross(&one, &x).unwrap(), e.double_product(&x, &one));
        let ka = e.k(KClass(vec![1]));
        let got = e.drinfeld_cross(&ka, &x).unwrap();
        let mut expect = Lin::new();
        expect.add_term(DoubleKey { plus: s, k: KClass(vec![-1]), minus: zero }, nu(q, -2));
        assert_eq!(got, expect);
    }
}

#[test]
fn rendering() {
    let c = Engine::new(ClassicalGeneric::default());
    let x = c.multiply(&c.basis(p(&[1])), &c.basis(p(&[1]))).unwrap();
    assert_eq!(c.render(&x), "(t+1)[1,1] + [2]");
    assert_eq!(c.render(&c.k(KClass(vec![-1]))), "k(-1)");
    let j = c.to_json(&x);
    assert_eq!(j[0]["label"], "[1,1]");
    assert_eq!(j[0]["coeff"], "t+1");
    assert_eq!(j[1]["k_offset"], serde_json::json!([0]));
}
