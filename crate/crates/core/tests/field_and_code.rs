use grscover_core::code::hamming_distance;
use grscover_core::field::lagrange_interpolate;
use grscover_core::{FieldElement, GrsCode, Poly, PrimeField, Word};
use proptest::prelude::*;

const PRIMES: [u64; 6] = [2, 3, 7, 11, 47, 2_147_483_647];

fn field_and_pair() -> impl Strategy<Value = (PrimeField, u64, u64, u64)> {
    (0..PRIMES.len(), any::<u64>(), any::<u64>(), any::<u64>())
        .prop_map(|(i, a, b, c)| (PrimeField::new(PRIMES[i]).unwrap(), a, b, c))
}

proptest! {
    #[test]
    fn field_axioms((f, a, b, c) in field_and_pair()) {
        let (a, b, c) = (f.elem(a), f.elem(b), f.elem(c));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a - a, f.zero());
        prop_assert_eq!(a + (-a), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(a * a.inv().unwrap(), f.one());
            prop_assert_eq!(b / a * a, b);
        }
    }

    #[test]
    fn fermat((f, a, _b, _c) in field_and_pair()) {
        let a = f.elem(a);
        prop_assert_eq!(a.pow(f.order() as u64), a);
    }

    #[test]
    fn interpolation_round_trip(coeffs in prop::collection::vec(0u64..47, 1..12), shift in 0u64..47) {
        let f = PrimeField::new(47).unwrap();
        let p = Poly::from_coeffs(f, &coeffs);
        let pts: Vec<(FieldElement, FieldElement)> = (0..coeffs.len() as u64)
            .map(|i| {
                let x = f.elem(i + shift);
                (x, p.eval(x).unwrap())
            })
            .collect();
        prop_assert_eq!(lagrange_interpolate(&pts).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        a in prop::collection::vec(0u64..11, 0..8),
        b in prop::collection::vec(0u64..11, 0..8),
        x in 0u64..11,
    ) {
        let f = PrimeField::new(11).unwrap();
        let (pa, pb, x) = (Poly::from_coeffs(f, &a), Poly::from_coeffs(f, &b), f.elem(x));
        prop_assert_eq!((&pa + &pb).eval(x).unwrap(), pa.eval(x).unwrap() + pb.eval(x).unwrap());
        prop_assert_eq!((&pa * &pb).eval(x).unwrap(), pa.eval(x).unwrap() * pb.eval(x).unwrap());
    }

    #[test]
    fn division_identity(
        a in prop::collection::vec(0u64..7, 0..10),
        b in prop::collection::vec(0u64..7, 1..6),
    ) {
        let f = PrimeField::new(7).unwrap();
        let (pa, pb) = (Poly::from_coeffs(f, &a), Poly::from_coeffs(f, &b));
        prop_assume!(!pb.is_zero());
        let (quo, rem) = pa.div_rem(&pb).unwrap();
        prop_assert_eq!(&(&quo * &pb) + &rem, pa);
        prop_assert!(rem.degree() < pb.degree());
    }

    #[test]
    fn encoding_commutes_with_puncturing(
        msg in prop::collection::vec(0u64..11, 1..6),
        vs in prop::collection::vec(1u64..11, 10),
    ) {
        let f = PrimeField::new(11).unwrap();
        let k = msg.len();
        let alphas: Vec<_> = (0..10u64).map(|i| f.elem((3 * i + 2) % 11)).collect();
        let vs: Vec<_> = vs.iter().map(|&v| f.elem(v)).collect();
        let code = GrsCode::new(f, k, &alphas, &vs).unwrap();
        let m = Poly::from_coeffs(f, &msg);
        let full = code.encode(&m).unwrap();
        let mut punct = code.clone();
        while punct.n() > k {
            punct = punct.puncture_last().unwrap();
            prop_assert_eq!(punct.encode(&m).unwrap(), full.truncated(punct.n()));
        }
        prop_assert!(punct.puncture_last().is_err());
    }

    #[test]
    fn distinct_codewords_are_at_least_d_apart(
        a in prop::collection::vec(0u64..7, 3),
        b in prop::collection::vec(0u64..7, 3),
    ) {
        let f = PrimeField::new(7).unwrap();
        let code = GrsCode::with_defaults(f, 6, 3).unwrap();
        let (ca, cb) = (code.encode(&Poly::from_coeffs(f, &a)).unwrap(), code.encode(&Poly::from_coeffs(f, &b)).unwrap());
        let dist = hamming_distance(&ca, &cb).unwrap();
        prop_assert!(a == b || dist >= code.d());
    }
}

#[test]
fn minimum_weight_is_attained() {
    // f = X (X - 1) (X - 2) vanishes on the first three points of [6, 4]_7.
    let f = PrimeField::new(7).unwrap();
    let code = GrsCode::with_defaults(f, 6, 4).unwrap();
    let m = Poly::from_coeffs(f, &[0, 2, 4, 1]);
    let c = code.encode(&m).unwrap();
    let zero = Word::from_residues(f, &[0; 6]).unwrap();
    assert_eq!(hamming_distance(&c, &zero).unwrap(), code.d());
}
