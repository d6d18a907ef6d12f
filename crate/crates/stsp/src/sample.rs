//! Seeded, platform-independent random draws for the verification suites.
//!
//! All randomness flows from one seed through ChaCha8, so identical
//! configurations reproduce identical reports on every platform. Integer
//! draws are uniform in `[-bound, bound]`; draws from an ideal or form
//! parameter land in the subgroup by construction.
//!
//! Index tuples are drawn *stratified*: valid tuples are grouped by their
//! sign pattern together with their pattern of opposite-index coincidences
//! (which is where the `ε_i` signs hide), and draws cycle through the groups
//! so every pattern is exercised.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::int::Int;
use crate::ring::{FormIdeal, GammaMode, RingSpec, Scalar};
use crate::space::{HVector, Idx};

/// The one random generator used by every suite.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shared configuration for a verification run.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub ring: RingSpec,
    pub rank: usize,
    pub form: FormIdeal,
    pub trials: u64,
    pub seed: u64,
    /// Magnitude bound for integer draws.
    pub bound: i128,
    /// Optional catalog entry filter.
    pub lemma_filter: Option<Vec<String>>,
}

impl VerifyConfig {
    pub fn new(ring: RingSpec, rank: usize, form: FormIdeal, trials: u64, seed: u64) -> Self {
        VerifyConfig {
            ring,
            rank,
            form,
            trials,
            seed,
            bound: 8,
            lemma_filter: None,
        }
    }

    pub fn absolute(ring: RingSpec, rank: usize, trials: u64, seed: u64) -> Self {
        VerifyConfig::new(ring, rank, FormIdeal::full(ring), trials, seed)
    }

    pub fn with_bound(mut self, bound: i128) -> Self {
        self.bound = bound;
        self
    }

    pub fn with_filter(mut self, filter: Option<Vec<String>>) -> Self {
        self.lemma_filter = filter;
        self
    }

    pub fn runs_entry(&self, id: &str) -> bool {
        match &self.lemma_filter {
            None => true,
            Some(list) => list.iter().any(|f| f == id),
        }
    }
}

/// Draw helpers bound to a ring, rank, bound and form ideal.
pub struct Sampler<'a> {
    pub rng: &'a mut ChaCha8Rng,
    pub ring: RingSpec,
    pub rank: usize,
    pub bound: i128,
    pub form: &'a FormIdeal,
}

impl<'a> Sampler<'a> {
    pub fn new(cfg: &'a VerifyConfig, rng: &'a mut ChaCha8Rng) -> Sampler<'a> {
        Sampler {
            rng,
            ring: cfg.ring,
            rank: cfg.rank,
            bound: cfg.bound,
            form: &cfg.form,
        }
    }

    /// A uniform ring element (bounded over `ℤ`).
    pub fn scalar(&mut self) -> Scalar {
        match self.ring {
            RingSpec::Integers => {
                Scalar::new(self.ring, self.rng.gen_range(-self.bound..=self.bound))
            }
            RingSpec::Mod(m) => Scalar::new(self.ring, self.rng.gen_range(0..m) as i128),
        }
    }

    /// A random element of the ideal `I`.
    pub fn ideal_scalar(&mut self) -> Scalar {
        match self.ring {
            RingSpec::Integers => {
                let d = self.form.ideal_gcd();
                let k = Int::from(self.rng.gen_range(-self.bound..=self.bound));
                Scalar::from_int(self.ring, d.mul_ref(&k))
            }
            RingSpec::Mod(_) => {
                let elems = self.form.ideal_elements();
                elems[self.rng.gen_range(0..elems.len())].clone()
            }
        }
    }

    /// A random element of the form parameter `Γ`.
    pub fn gamma_scalar(&mut self) -> Scalar {
        match self.ring {
            RingSpec::Integers => {
                let d = self.form.gamma_gcd();
                let k = Int::from(self.rng.gen_range(-self.bound..=self.bound));
                Scalar::from_int(self.ring, d.mul_ref(&k))
            }
            RingSpec::Mod(_) => {
                let elems = self.form.gamma_elements();
                elems[self.rng.gen_range(0..elems.len())].clone()
            }
        }
    }

    pub fn index(&mut self) -> Idx {
        let l = self.rank as i32;
        loop {
            let raw = self.rng.gen_range(-l..=l);
            if raw != 0 {
                return Idx::new(raw, self.rank).unwrap();
            }
        }
    }

    /// A vector with every coordinate drawn from the ring.
    pub fn vector(&mut self) -> HVector {
        let mut v = HVector::zero(self.rank, self.ring);
        for i in Idx::all(self.rank) {
            let c = self.scalar();
            v.set_coord(i, c);
        }
        v
    }

    /// A vector with coordinates in `I`, zero on the listed indices.
    pub fn ideal_vector_zero_at(&mut self, zeros: &[Idx]) -> HVector {
        let mut v = HVector::zero(self.rank, self.ring);
        for i in Idx::all(self.rank) {
            if zeros.contains(&i) {
                continue;
            }
            let c = self.ideal_scalar();
            v.set_coord(i, c);
        }
        v
    }

    /// A ring vector, zero on the listed indices.
    pub fn vector_zero_at(&mut self, zeros: &[Idx]) -> HVector {
        let mut v = HVector::zero(self.rank, self.ring);
        for i in Idx::all(self.rank) {
            if zeros.contains(&i) {
                continue;
            }
            let c = self.scalar();
            v.set_coord(i, c);
        }
        v
    }

    /// A vector orthogonal to `u` by construction: on each hyperbolic pair
    /// where `u` is nonzero the result is a multiple of `u`'s pair part, and
    /// on pairs where `u` vanishes the coordinates are free. Pairs listed in
    /// `zeros` (by positive index) are left at zero. With `in_ideal`, all
    /// coordinates land in `I`.
    pub fn orthogonal_to(&mut self, u: &HVector, zeros: &[Idx], in_ideal: bool) -> HVector {
        let mut v = HVector::zero(self.rank, self.ring);
        for m in 1..=self.rank as i32 {
            let pos = Idx::new(m, self.rank).unwrap();
            let neg = pos.opposite();
            if zeros.contains(&pos) || zeros.contains(&neg) {
                continue;
            }
            let up = u.coord(pos);
            let un = u.coord(neg);
            if up.is_zero() && un.is_zero() {
                let (a, b) = if in_ideal {
                    (self.ideal_scalar(), self.ideal_scalar())
                } else {
                    (self.scalar(), self.scalar())
                };
                v.set_coord(pos, a);
                v.set_coord(neg, b);
            } else {
                let t = if in_ideal {
                    self.ideal_scalar()
                } else {
                    self.scalar()
                };
                v.set_coord(pos, up * &t);
                v.set_coord(neg, un * &t);
            }
        }
        v
    }
}

/// Valid index tuples for one relation family, grouped for stratified
/// draws by sign pattern plus opposite-index coincidences.
pub struct StratifiedIndices {
    groups: Vec<Vec<Vec<Idx>>>,
}

impl StratifiedIndices {
    /// Enumerates all `arity`-tuples of hyperbolic indices passing `valid`
    /// and groups them.
    pub fn new(rank: usize, arity: usize, valid: impl Fn(&[Idx]) -> bool) -> StratifiedIndices {
        let all: Vec<Idx> = Idx::all(rank).collect();
        let mut tuples: Vec<Vec<Idx>> = vec![vec![]];
        for _ in 0..arity {
            let mut next = Vec::new();
            for t in &tuples {
                for &i in &all {
                    let mut t2 = t.clone();
                    t2.push(i);
                    next.push(t2);
                }
            }
            tuples = next;
        }
        let mut map: std::collections::BTreeMap<Vec<i8>, Vec<Vec<Idx>>> = Default::default();
        for t in tuples.into_iter().filter(|t| valid(t)) {
            let mut key: Vec<i8> = t.iter().map(|i| i.sign() as i8).collect();
            for p in 0..t.len() {
                for q in (p + 1)..t.len() {
                    key.push(if t[p] == t[q].opposite() { 1 } else { 0 });
                    key.push(if t[p] == t[q] { 1 } else { 0 });
                }
            }
            map.entry(key).or_default().push(t);
        }
        StratifiedIndices {
            groups: map.into_values().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// The tuple for draw number `case`: groups are visited round-robin,
    /// the member within a group is random.
    pub fn pick(&self, case: u64, rng: &mut ChaCha8Rng) -> &[Idx] {
        let group = &self.groups[(case as usize) % self.groups.len()];
        &group[rng.gen_range(0..group.len())]
    }
}

/// Renders a binding as `name=value` pairs joined by spaces.
pub fn binding(parts: &[(&str, String)]) -> String {
    parts
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Default form ideals used by suite presets: `(2)` over `ℤ` and `ℤ/4`,
/// `(3)` over `ℤ/9`, `(4)` over `ℤ/12`.
pub fn preset_ideal(ring: RingSpec, gamma: GammaMode) -> FormIdeal {
    let gen = match ring {
        RingSpec::Integers => 2,
        RingSpec::Mod(4) => 2,
        RingSpec::Mod(9) => 3,
        RingSpec::Mod(12) => 4,
        RingSpec::Mod(_) => 2,
    };
    FormIdeal::new(ring, vec![Scalar::new(ring, gen)], gamma).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::form;

    #[test]
    fn orthogonal_by_construction() {
        let ring = RingSpec::Integers;
        let f = FormIdeal::new(ring, vec![Scalar::new(ring, 2)], GammaMode::Maximal).unwrap();
        let cfg = VerifyConfig::new(ring, 3, f, 1, 7);
        let mut rng = seeded_rng(3);
        let mut s = Sampler::new(&cfg, &mut rng);
        for _ in 0..50 {
            let u = s.vector();
            let v = s.orthogonal_to(&u, &[], false);
            assert!(form(&u, &v).unwrap().is_zero());
            let w = s.orthogonal_to(&u, &[], true);
            assert!(form(&u, &w).unwrap().is_zero());
            assert!(w.in_ideal(&cfg.form).unwrap());
        }
    }

    #[test]
    fn stratified_covers_sign_patterns() {
        // Pairs (i, j) with i ≠ j: there must be groups with j = -i and
        // groups with all four sign combinations.
        let strat = StratifiedIndices::new(3, 2, |t| t[0] != t[1]);
        assert!(!strat.is_empty());
        let mut rng = seeded_rng(0);
        let mut seen_long = false;
        let mut signs = std::collections::BTreeSet::new();
        for case in 0..64 {
            let t = strat.pick(case, &mut rng).to_vec();
            if t[0] == t[1].opposite() {
                seen_long = true;
            }
            signs.insert((t[0].sign(), t[1].sign()));
        }
        assert!(seen_long);
        assert_eq!(signs.len(), 4);
    }

    #[test]
    fn same_seed_same_draws() {
        let ring = RingSpec::modulo(12).unwrap();
        let f = FormIdeal::new(ring, vec![Scalar::new(ring, 4)], GammaMode::Maximal).unwrap();
        let cfg = VerifyConfig::new(ring, 3, f, 1, 7);
        let draw = |cfg: &VerifyConfig| {
            let mut rng = seeded_rng(cfg.seed);
            let mut s = Sampler::new(cfg, &mut rng);
            (0..20).map(|_| s.scalar()).collect::<Vec<_>>()
        };
        assert_eq!(draw(&cfg), draw(&cfg));
    }

    #[test]
    fn ideal_and_gamma_draws_are_members() {
        for (ring, gamma) in [
            (RingSpec::Integers, GammaMode::Minimal),
            (RingSpec::modulo(8).unwrap(), GammaMode::Minimal),
            (RingSpec::modulo(12).unwrap(), GammaMode::Maximal),
        ] {
            let f = FormIdeal::new(ring, vec![Scalar::new(ring, 2)], gamma).unwrap();
            let cfg = VerifyConfig::new(ring, 3, f, 1, 9);
            let mut rng = seeded_rng(11);
            let mut s = Sampler::new(&cfg, &mut rng);
            for _ in 0..40 {
                let a = s.ideal_scalar();
                let g = s.gamma_scalar();
                assert!(cfg.form.ideal_member(&a).unwrap());
                assert!(cfg.form.gamma_member(&g).unwrap());
            }
        }
    }
}
