use idealarith::factorcore::{recognize_aap, Factorizer, LengthSet, MonoidOracle, PlaneMonoid};
use idealarith::polyarith::Ideal;
use idealarith::powermonoid::{prime_decompose, sumset, FiniteSet, ReducedPowerMonoid};
use idealarith::Result;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Lists the inner oracle's divisor pairs in a seeded random order, with
/// random sides swapped.
struct Shuffled<O> {
    inner: O,
    seed: u64,
}

impl<O: MonoidOracle> MonoidOracle for Shuffled<O> {
    type Element = O::Element;

    fn is_identity(&self, a: &O::Element) -> bool {
        self.inner.is_identity(a)
    }

    fn divisor_pairs(&self, a: &O::Element) -> Result<Vec<(O::Element, O::Element)>> {
        let mut pairs = self.inner.divisor_pairs(a)?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ format!("{a:?}").len() as u64);
        pairs.shuffle(&mut rng);
        for (i, p) in pairs.iter_mut().enumerate() {
            if (i as u64 + self.seed) % 2 == 1 {
                std::mem::swap(&mut p.0, &mut p.1);
            }
        }
        Ok(pairs)
    }

    fn combine(&self, a: &O::Element, b: &O::Element) -> O::Element {
        self.inner.combine(a, b)
    }
}

fn reduced_set(max: u32) -> impl Strategy<Value = FiniteSet> {
    prop::collection::btree_set(1..=max, 1..=max as usize)
        .prop_map(|s| FiniteSet::new(std::iter::once(0).chain(s)).unwrap())
}

fn any_set(max: u32) -> impl Strategy<Value = FiniteSet> {
    prop::collection::btree_set(0..=max, 1..=4).prop_map(|s| FiniteSet::new(s).unwrap())
}

fn binary_form() -> impl Strategy<Value = String> {
    (1u32..=3, 0u32..=3, -3i32..=3, 0u32..=2, 1u32..=3).prop_map(|(d, i, c, j, e)| {
        let i = i.min(d);
        let j = j.min(e);
        let c = if c == 0 || c == -1 { 2 } else { c };
        format!("{c}*X^{}*Y^{i} + X^{}*Y^{j}", d - i, e - j)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shuffled_oracle_same_lengths(seed in any::<u64>(), x in 1u32..=8, y in 1u32..=8) {
        let plain = PlaneMonoid::new(8);
        let shuffled = Shuffled { inner: PlaneMonoid::new(8), seed };
        let a = Factorizer::new(&plain).length_set(&(x, y)).unwrap();
        let mut fz = Factorizer::new(&shuffled);
        prop_assert_eq!(fz.length_set(&(x, y)).unwrap(), a);
        let mut left = Factorizer::new(&plain).factorizations(&(x, y), 5_000).unwrap();
        let mut right = fz.factorizations(&(x, y), 5_000).unwrap();
        left.sort();
        right.sort();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn shuffled_power_oracle_same_lengths(seed in any::<u64>(), a in reduced_set(7)) {
        let plain = ReducedPowerMonoid::new(7);
        let shuffled = Shuffled { inner: ReducedPowerMonoid::new(7), seed };
        prop_assert_eq!(
            Factorizer::new(&plain).length_set(&a).unwrap(),
            Factorizer::new(&shuffled).length_set(&a).unwrap()
        );
    }

    #[test]
    fn sumset_is_commutative_and_associative(a in any_set(6), b in any_set(6), c in any_set(6)) {
        prop_assert_eq!(sumset(&a, &b), sumset(&b, &a));
        prop_assert_eq!(sumset(&sumset(&a, &b), &c), sumset(&a, &sumset(&b, &c)));
        prop_assert_eq!(sumset(&a, &FiniteSet::zero()), a.clone());
    }

    #[test]
    fn prime_decomposition_shifts_back(a in any_set(8)) {
        let (k, r) = prime_decompose(&a);
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.shift(k), a);
    }

    #[test]
    fn lengths_are_subadditive_in_products(a in reduced_set(5), b in reduced_set(5)) {
        let m = ReducedPowerMonoid::new(10);
        let mut fz = Factorizer::new(&m);
        let la = fz.length_set(&a).unwrap();
        let lb = fz.length_set(&b).unwrap();
        let lab = fz.length_set(&sumset(&a, &b)).unwrap();
        for l in la.sumset(&lb).as_slice() {
            prop_assert!(lab.contains(*l));
        }
    }

    #[test]
    fn length_set_arithmetic(xs in prop::collection::btree_set(1usize..20, 1..6), ys in prop::collection::btree_set(1usize..20, 1..6)) {
        let a = LengthSet::new(xs).unwrap();
        let b = LengthSet::new(ys).unwrap();
        let s = a.sumset(&b);
        prop_assert_eq!(s.min(), a.min() + b.min());
        prop_assert_eq!(s.max(), a.max() + b.max());
        prop_assert!(a.rho() >= idealarith::factorcore::Rho::from_integer(1));
    }

    #[test]
    fn recognized_progressions_rebuild_the_input(xs in prop::collection::btree_set(0i64..25, 1..10)) {
        let l: Vec<i64> = xs.into_iter().collect();
        let r = recognize_aap(&l, 6);
        for p in r.aap.iter().chain(r.aamp.iter()) {
            prop_assert!(p.validates(&l));
            prop_assert_eq!(p.reconstruct(), l.clone());
        }
        if r.is_aap() {
            prop_assert!(r.is_aamp());
        }
    }

    #[test]
    fn planted_progressions_are_found(y in 0i64..10, d in 1i64..5, n in 2i64..6, lower in prop::collection::btree_set(2i64..=3, 0..2), gap in 2i64..=3) {
        // fringes stay in the residue class of y, within 3d of the central part
        let top = y + d * n;
        let mut l: Vec<i64> = lower.iter().map(|z| y - d * z).collect();
        l.extend((0..=n).map(|i| y + d * i));
        l.push(top + d * gap);
        l.sort();
        let r = recognize_aap(&l, 3 * d);
        prop_assert!(r.is_aap(), "{:?}", l);
        prop_assert!(r.aap.unwrap().validates(&l));
    }

    #[test]
    fn ideal_products_commute(f in binary_form(), g in binary_form()) {
        let i = Ideal::parse(&format!("<{f}>")).unwrap();
        let j = Ideal::parse(&format!("<{g}; X^4; Y^4>")).unwrap();
        prop_assert!(i.product(&j).same_ideal(&j.product(&i)).unwrap());
        let (a, b, ab) = (i.mdeg().finite().unwrap(), j.mdeg().finite().unwrap(), i.product(&j).mdeg().finite().unwrap());
        prop_assert_eq!(a + b, ab);
    }

    #[test]
    fn ideal_display_parses_back(f in binary_form(), g in binary_form()) {
        let i = Ideal::parse(&format!("<{f}; {g}>")).unwrap();
        let back = Ideal::parse(&i.to_string()).unwrap();
        prop_assert!(i.same_ideal(&back).unwrap());
        prop_assert_eq!(i.gb_hash().unwrap(), back.gb_hash().unwrap());
    }
}
