use clusterforge::ccmap::{cc_map_module, support_cone_check, verify_denominator_theorem, DecoratedObject};
use clusterforge::grassmannian::euler_characteristic;
use clusterforge::linalg::q;
use clusterforge::rep::Representation;
use clusterforge::tubes::{
    check_difference_property, exceptional_tubes, homogeneous_regular, tube_characters, Lambda,
};
use clusterforge::{Error, LaurentPolynomial, Quiver};
use num_bigint::BigInt;

fn lp(vars: &[u32], s: &str) -> LaurentPolynomial {
    LaurentPolynomial::parse(vars, s).unwrap()
}

fn a21() -> Quiver {
    Quiver::affine_a(2, 1).unwrap()
}

fn a31() -> Quiver {
    Quiver::affine_a(3, 1).unwrap()
}

#[test]
fn kronecker_delta_module_gives_z() {
    let k = Quiver::kronecker();
    let m = Representation::thin_indecomposable(&k, &[1, 1], Some((0, q(3)))).unwrap();
    assert_eq!(
        cc_map_module(&m).unwrap(),
        lp(&[1, 2], "(1 + u1^2 + u2^2)/(u1*u2)")
    );
}

#[test]
fn a21_grassmannian_table() {
    let qv = a21();
    // M_lambda, M_{E_0} (1->2 is zero), M_{E_1} (2->3 is zero).
    let ml = Representation::thin_indecomposable(&qv, &[1, 1, 1], Some((1, q(5)))).unwrap();
    let me0 = Representation::thin_indecomposable(&qv, &[1, 1, 1], Some((0, q(0)))).unwrap();
    let me1 = Representation::thin_indecomposable(&qv, &[1, 1, 1], Some((1, q(0)))).unwrap();
    let es = [
        [0, 0, 0],
        [0, 0, 1],
        [0, 1, 0],
        [1, 0, 0],
        [0, 1, 1],
        [1, 0, 1],
        [1, 1, 0],
        [1, 1, 1],
    ];
    let rows = [
        (&ml, [1, 1, 0, 0, 1, 0, 0, 1]),
        (&me0, [1, 1, 0, 0, 1, 1, 0, 1]),
        // The paper prints a subrepresentation for [110] but chi = 0 there.
        (&me1, [1, 1, 1, 0, 1, 0, 0, 1]),
    ];
    for (m, expect) in rows {
        for (e, x) in es.iter().zip(expect) {
            assert_eq!(euler_characteristic(m, e).unwrap(), BigInt::from(x), "e = {e:?}");
        }
    }
    let vars = [1, 2, 3];
    let x_ml = lp(&vars, "(u2*u1^2 + u1 + u3 + u2*u3^2)/(u1*u2*u3)");
    let x_me = lp(&vars, "(u2*u1^2 + u3*u1*u2 + u1 + u3 + u2*u3^2)/(u1*u2*u3)");
    assert_eq!(cc_map_module(&ml).unwrap(), x_ml);
    assert_eq!(cc_map_module(&me0).unwrap(), x_me);
    assert_eq!(cc_map_module(&me1).unwrap(), x_me);
}

#[test]
fn a31_values() {
    let qv = a31();
    let vars = [1, 2, 3, 4];
    let m0 = Representation::thin_indecomposable(&qv, &[1, 1, 1, 1], Some((2, q(0)))).unwrap();
    assert_eq!(euler_characteristic(&m0, &[0, 1, 1, 0]).unwrap(), BigInt::from(1));
    assert_eq!(
        cc_map_module(&m0).unwrap(),
        lp(
            &vars,
            "(u1*u4*u3^2 + u3*u1^2*u4 + u3*u2*u4^2 + u4*u3 + u3*u2*u1^2 + u1*u4 + u2*u1)/(u1*u2*u3*u4)"
        )
    );
    let ml = homogeneous_regular(&qv, &Lambda::int(1)).unwrap();
    assert_eq!(
        cc_map_module(&ml).unwrap(),
        lp(
            &vars,
            "(u3*u2*u1^2 + u2*u1 + u1*u4 + u4*u3 + u3*u2*u4^2)/(u1*u2*u3*u4)"
        )
    );
}

#[test]
fn tubes_of_small_cycles() {
    let t = exceptional_tubes(&a21()).unwrap();
    assert_eq!(t.len(), 1);
    let mut dims = t[0].quasi_simple_dims.clone();
    dims.sort();
    assert_eq!(dims, vec![vec![0, 1, 0], vec![1, 0, 1]]);

    let t = exceptional_tubes(&a31()).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(
        t[0].quasi_simple_dims,
        vec![vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![1, 0, 0, 1]]
    );

    let t = exceptional_tubes(&Quiver::affine_a(2, 2).unwrap()).unwrap();
    assert_eq!(t.len(), 2);
    assert!(t.iter().all(|x| x.rank == 2));
}

#[test]
fn exceptional_parameters_are_rejected() {
    assert!(matches!(
        homogeneous_regular(&a21(), &Lambda::int(0)),
        Err(Error::ExceptionalParameter(_))
    ));
    assert!(matches!(
        homogeneous_regular(&a31(), &Lambda::int(0)),
        Err(Error::ExceptionalParameter(_))
    ));
    assert!(homogeneous_regular(&a21(), &Lambda::Infinity).is_ok());
    assert!(homogeneous_regular(&Quiver::kronecker(), &Lambda::int(0)).is_ok());
}

#[test]
fn rank_two_tube_character() {
    let qv = a21();
    let tube = &exceptional_tubes(&qv).unwrap()[0];
    let table = tube_characters(&qv, tube, 2).unwrap();
    let x_me = lp(&[1, 2, 3], "(u2*u1^2 + u3*u1*u2 + u1 + u3 + u2*u3^2)/(u1*u2*u3)");
    assert_eq!(table.get(0, 2).unwrap(), &x_me);
    assert_eq!(table.get(1, 2).unwrap(), &x_me);
}

#[test]
fn difference_property_examples() {
    let qv = a21();
    for r in check_difference_property(&qv, &exceptional_tubes(&qv).unwrap()[0]).unwrap() {
        assert!(r.holds);
        assert_eq!(r.difference, LaurentPolynomial::one(&[1, 2, 3]));
    }
    let qv = a31();
    let reports = check_difference_property(&qv, &exceptional_tubes(&qv).unwrap()[0]).unwrap();
    assert!(reports.iter().all(|r| r.holds));
    let e0 = reports.iter().find(|r| r.quasi_socle == vec![0, 0, 1, 0]).unwrap();
    assert_eq!(e0.difference, lp(&[1, 2, 3, 4], "(u1 + u3)/u2"));
    let qv = Quiver::affine_a(2, 2).unwrap();
    for tube in exceptional_tubes(&qv).unwrap() {
        for r in check_difference_property(&qv, &tube).unwrap() {
            assert!(r.holds);
            assert_eq!(r.difference, LaurentPolynomial::one(&[1, 2, 3, 4]));
        }
    }
}

#[test]
fn denominator_and_cone_examples() {
    let qv = a21();
    let ml = homogeneous_regular(&qv, &Lambda::int(1)).unwrap();
    let obj = DecoratedObject::from_module(ml);
    assert!(verify_denominator_theorem(&obj).unwrap());
    assert!(support_cone_check(&obj).unwrap());
    let s2 = DecoratedObject::from_module(Representation::simple(&qv, 1));
    assert!(support_cone_check(&s2).unwrap());
    let p = DecoratedObject::shifted_projective(&qv, 2);
    assert!(verify_denominator_theorem(&p).unwrap());
    let k = DecoratedObject::from_module(Representation::simple(&Quiver::kronecker(), 0));
    assert!(matches!(support_cone_check(&k), Err(Error::Unsupported(_))));
}
