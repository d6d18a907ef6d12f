//! Commutative rings with exact arithmetic, and form ideals over them.
//!
//! Two rings are supported: the integers and the integers modulo `m`. Both
//! have decidable ideal membership, which is what makes every identity in
//! this crate falsifiable by direct computation. A *form ideal* `(I, Γ)`
//! pairs an ideal `I` with a relative form parameter `Γ`: an additive
//! subgroup of `I` satisfying
//!
//! - `2a ∈ Γ` for all `a ∈ I`,
//! - `ra² ∈ Γ` for all `r ∈ R`, `a ∈ I`,
//! - `αr² ∈ Γ` for all `α ∈ Γ`, `r ∈ R`.
//!
//! When `2` is a unit the only choice is `Γ = I`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::int::Int;

/// A supported coefficient ring: `ℤ` or `ℤ/m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    Integers,
    /// Integers modulo `m`, `m ≥ 2`. Elements are canonical representatives
    /// in `[0, m)`.
    Mod(u64),
}

impl RingSpec {
    pub fn modulo(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        Ok(RingSpec::Mod(m))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, RingSpec::Mod(_))
    }

    /// All ring elements, for finite rings only.
    pub fn elements(self) -> impl Iterator<Item = Scalar> {
        let (ring, m) = match self {
            RingSpec::Mod(m) => (self, m),
            RingSpec::Integers => panic!("cannot enumerate the integers"),
        };
        (0..m).map(move |v| Scalar::new(ring, v as i128))
    }

    /// Parses the textual ring syntax: `z` or `zmod:<m>`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "z" || t == "Z" {
            return Ok(RingSpec::Integers);
        }
        if let Some(m) = t.strip_prefix("zmod:") {
            let m: u64 = m.parse().map_err(|_| Error::Parse {
                pos: 5,
                msg: format!("bad modulus {m:?}"),
            })?;
            return RingSpec::modulo(m);
        }
        Err(Error::Parse {
            pos: 0,
            msg: format!("unknown ring {t:?}, expected `z` or `zmod:<m>`"),
        })
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "z"),
            RingSpec::Mod(m) => write!(f, "zmod:{m}"),
        }
    }
}

/// An exact ring element together with its owning ring.
///
/// Arithmetic is exact and total: integer values promote to heap integers
/// instead of overflowing, and `ℤ/m` values are kept canonical in `[0, m)`.
/// Mixing rings is a bug, never a coercion, and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    ring: RingSpec,
    value: Int,
}

fn canonical(ring: RingSpec, raw: Int) -> Int {
    match ring {
        RingSpec::Integers => raw,
        RingSpec::Mod(m) => Int::from(raw.rem_euclid_u64(m)),
    }
}

impl Scalar {
    pub fn new(ring: RingSpec, raw: i128) -> Self {
        Scalar::from_int(ring, Int::from(raw))
    }

    pub fn from_int(ring: RingSpec, raw: Int) -> Self {
        Scalar {
            ring,
            value: canonical(ring, raw),
        }
    }

    pub fn zero(ring: RingSpec) -> Self {
        Scalar {
            ring,
            value: Int::zero(),
        }
    }

    pub fn one(ring: RingSpec) -> Self {
        Scalar::new(ring, 1)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    /// The canonical representative (in `[0, m)` for `ℤ/m`).
    pub fn value(&self) -> &Int {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.ring)
    }

    #[inline]
    fn same_ring(&self, other: &Scalar) -> RingSpec {
        if self.ring != other.ring {
            panic!("ring mismatch: {} vs {}", self.ring, other.ring);
        }
        self.ring
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one(self.ring);
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }
}

fn scalar_add(a: &Scalar, b: &Scalar) -> Scalar {
    let ring = a.same_ring(b);
    Scalar::from_int(ring, a.value.add_ref(&b.value))
}

fn scalar_sub(a: &Scalar, b: &Scalar) -> Scalar {
    let ring = a.same_ring(b);
    Scalar::from_int(ring, a.value.sub_ref(&b.value))
}

fn scalar_mul(a: &Scalar, b: &Scalar) -> Scalar {
    let ring = a.same_ring(b);
    Scalar::from_int(ring, a.value.mul_ref(&b.value))
}

macro_rules! impl_scalar_binop {
    ($trait:ident, $method:ident, $func:ident) => {
        impl std::ops::$trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $func(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $func(&self, rhs)
            }
        }
        impl std::ops::$trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $func(self, &rhs)
            }
        }
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $func(self, rhs)
            }
        }
    };
}

impl_scalar_binop!(Add, add, scalar_add);
impl_scalar_binop!(Sub, sub, scalar_sub);
impl_scalar_binop!(Mul, mul, scalar_mul);

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::from_int(self.ring, self.value.neg_ref())
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::from_int(self.ring, self.value.neg_ref())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// How the relative form parameter `Γ` of a form ideal is specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaMode {
    /// `Γ = I`.
    Maximal,
    /// The smallest admissible parameter: the additive subgroup generated by
    /// `{2a : a ∈ I} ∪ {ra² : r ∈ R, a ∈ I}`.
    Minimal,
    /// The additive subgroup generated by the given elements and closed
    /// under multiplication by squares. Finite rings only.
    Explicit(Vec<Scalar>),
}

/// Internal representation of `Γ` with decidable membership.
#[derive(Debug, Clone, PartialEq, Eq)]
enum GammaRepr {
    /// Same membership test as the ideal.
    SameAsIdeal,
    /// `d·ℤ` inside the ring (`d = 0` meaning the zero subgroup).
    Cyclic(Int),
    /// Explicit saturated element set (finite rings).
    Set(BTreeSet<i128>),
}

/// A form ideal `(I, Γ)`: a finitely generated ideal together with a
/// relative form parameter with decidable membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormIdeal {
    ring: RingSpec,
    ideal_generators: Vec<Scalar>,
    gamma_mode: GammaMode,
    /// gcd of the ideal generators (and the modulus, for `ℤ/m`); membership
    /// in `I` is divisibility by this.
    ideal_gcd: Int,
    gamma: GammaRepr,
}

impl FormIdeal {
    /// Builds a form ideal, computing membership data for `Γ` up front.
    ///
    /// Fails when an explicit `Γ` is requested over the integers (saturation
    /// would not terminate) or when an explicit generator falls outside `I`.
    pub fn new(
        ring: RingSpec,
        ideal_generators: Vec<Scalar>,
        gamma_mode: GammaMode,
    ) -> Result<Self> {
        for g in &ideal_generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch(ring, g.ring()));
            }
        }
        let modulus = match ring {
            RingSpec::Integers => Int::zero(),
            RingSpec::Mod(m) => Int::from(m as i128),
        };
        let mut d = modulus;
        for g in &ideal_generators {
            d = d.gcd(g.value());
        }
        let gamma = match &gamma_mode {
            GammaMode::Maximal => GammaRepr::SameAsIdeal,
            GammaMode::Minimal => match ring {
                // 2I + I²·ℤ = gcd(2d, d²)·ℤ.
                RingSpec::Integers => {
                    GammaRepr::Cyclic(d.mul_ref(&Int::from(2)).gcd(&d.mul_ref(&d)))
                }
                RingSpec::Mod(_) => {
                    let ideal: Vec<i128> = ideal_elements(ring, &d).collect();
                    let mut seed: BTreeSet<i128> = BTreeSet::new();
                    for &a in &ideal {
                        seed.insert(Scalar::new(ring, 2 * a).value().as_i128().unwrap());
                        for r in ring.elements() {
                            let v = r * Scalar::new(ring, a * a);
                            seed.insert(v.value().as_i128().unwrap());
                        }
                    }
                    GammaRepr::Set(additive_square_closure(ring, seed))
                }
            },
            GammaMode::Explicit(gens) => {
                if ring == RingSpec::Integers {
                    return Err(Error::InfiniteSaturation);
                }
                let mut seed: BTreeSet<i128> = BTreeSet::new();
                for g in gens {
                    if g.ring() != ring {
                        return Err(Error::RingMismatch(ring, g.ring()));
                    }
                    if !g.value().divisible_by(&d) {
                        return Err(Error::NotInIdeal(format!("Γ generator {g}")));
                    }
                    seed.insert(g.value().as_i128().unwrap());
                }
                seed.insert(0);
                GammaRepr::Set(additive_square_closure(ring, seed))
            }
        };
        Ok(FormIdeal {
            ring,
            ideal_generators,
            gamma_mode,
            ideal_gcd: d,
            gamma,
        })
    }

    /// The full form ideal `(R, R)`: the absolute situation.
    pub fn full(ring: RingSpec) -> Self {
        FormIdeal::new(ring, vec![Scalar::one(ring)], GammaMode::Maximal).unwrap()
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn ideal_generators(&self) -> &[Scalar] {
        &self.ideal_generators
    }

    pub fn gamma_mode(&self) -> &GammaMode {
        &self.gamma_mode
    }

    pub fn is_maximal(&self) -> bool {
        matches!(self.gamma_mode, GammaMode::Maximal)
    }

    /// True when `Γ` and `I` have the same members, whichever mode produced
    /// them.
    pub fn gamma_equals_ideal(&self) -> bool {
        match &self.gamma {
            GammaRepr::SameAsIdeal => true,
            GammaRepr::Cyclic(dg) => match self.ring {
                RingSpec::Integers => *dg == self.ideal_gcd,
                RingSpec::Mod(m) => {
                    dg.gcd(&Int::from(m as i128)) == self.ideal_gcd.gcd(&Int::from(m as i128))
                }
            },
            GammaRepr::Set(set) => set.len() == ideal_elements(self.ring, &self.ideal_gcd).count(),
        }
    }

    /// Membership in the ideal `I`: divisibility by the generator gcd.
    pub fn ideal_member(&self, x: &Scalar) -> Result<bool> {
        if x.ring() != self.ring {
            return Err(Error::RingMismatch(self.ring, x.ring()));
        }
        Ok(x.value().divisible_by(&self.ideal_gcd))
    }

    /// Membership in the relative form parameter `Γ`.
    pub fn gamma_member(&self, x: &Scalar) -> Result<bool> {
        if x.ring() != self.ring {
            return Err(Error::RingMismatch(self.ring, x.ring()));
        }
        Ok(match &self.gamma {
            GammaRepr::SameAsIdeal => x.value().divisible_by(&self.ideal_gcd),
            GammaRepr::Cyclic(d) => x.value().divisible_by(d),
            GammaRepr::Set(set) => set.contains(&x.value().as_i128().expect("canonical")),
        })
    }

    /// All elements of `I`, for finite rings.
    pub fn ideal_elements(&self) -> Vec<Scalar> {
        ideal_elements(self.ring, &self.ideal_gcd)
            .map(|v| Scalar::new(self.ring, v))
            .collect()
    }

    /// All elements of `Γ`, for finite rings.
    pub fn gamma_elements(&self) -> Vec<Scalar> {
        match &self.gamma {
            GammaRepr::SameAsIdeal => self.ideal_elements(),
            GammaRepr::Cyclic(d) => ideal_elements(self.ring, d)
                .map(|v| Scalar::new(self.ring, v))
                .collect(),
            GammaRepr::Set(set) => set.iter().map(|&v| Scalar::new(self.ring, v)).collect(),
        }
    }

    /// Generator of the cyclic group underlying `I` (the gcd, with the
    /// modulus folded in for finite rings).
    pub fn ideal_gcd(&self) -> Int {
        self.ideal_gcd.clone()
    }

    /// Generator of the cyclic group underlying `Γ`; panics for explicit
    /// parameters, which are set-represented.
    pub fn gamma_gcd(&self) -> Int {
        match &self.gamma {
            GammaRepr::SameAsIdeal => self.ideal_gcd.clone(),
            GammaRepr::Cyclic(d) => d.clone(),
            GammaRepr::Set(_) => panic!("explicit Γ has no cyclic generator"),
        }
    }

    /// Parses `--ideal` syntax: a comma-separated generator list, e.g. `2,6`.
    pub fn parse_ideal(ring: RingSpec, text: &str) -> Result<Vec<Scalar>> {
        let mut gens = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let v: Int = part.parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad ideal generator {part:?}"),
            })?;
            gens.push(Scalar::from_int(ring, v));
        }
        Ok(gens)
    }

    /// Parses `--gamma` syntax: `max`, `min`, or a generator list like `4,8`.
    pub fn parse_gamma(ring: RingSpec, text: &str) -> Result<GammaMode> {
        match text.trim() {
            "max" => Ok(GammaMode::Maximal),
            "min" => Ok(GammaMode::Minimal),
            list => Ok(GammaMode::Explicit(FormIdeal::parse_ideal(ring, list)?)),
        }
    }
}

impl fmt::Display for FormIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ideal (", self.ring)?;
        for (k, g) in self.ideal_generators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ") gamma ")?;
        match &self.gamma_mode {
            GammaMode::Maximal => write!(f, "max)"),
            GammaMode::Minimal => write!(f, "min)"),
            GammaMode::Explicit(gens) => {
                write!(f, "(")?;
                for (k, g) in gens.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, "))")
            }
        }
    }
}

fn ideal_elements(ring: RingSpec, d: &Int) -> impl Iterator<Item = i128> {
    let m = match ring {
        RingSpec::Mod(m) => m as i128,
        RingSpec::Integers => panic!("cannot enumerate an ideal of the integers"),
    };
    let d = d.as_i128().expect("gcd fits");
    let step = if d == 0 { m } else { d };
    (0..m / step).map(move |k| k * step)
}

/// Smallest additive subgroup containing `seed` and closed under
/// multiplication by squares. Terminates on finite rings.
fn additive_square_closure(ring: RingSpec, seed: BTreeSet<i128>) -> BTreeSet<i128> {
    let m = match ring {
        RingSpec::Mod(m) => m as i128,
        RingSpec::Integers => unreachable!(),
    };
    let squares: BTreeSet<i128> = (0..m).map(|r| (r * r).rem_euclid(m)).collect();
    let mut set = seed;
    set.insert(0);
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                next.insert((a + b).rem_euclid(m));
            }
            next.insert((-a).rem_euclid(m));
            for &s in &squares {
                next.insert((a * s).rem_euclid(m));
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// One violated form-ideal axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    /// `a`, `b` or `c`.
    pub axiom: char,
    /// The witnesses, rendered as `name=value` pairs.
    pub witness: String,
}

/// Checks the three form-parameter axioms on a form ideal.
///
/// Finite rings are checked exhaustively regardless of `samples`; over the
/// integers `samples` pseudo-random draws are taken with the given seed.
/// Violations are report content, not errors.
pub fn validate_form_ideal(form: &FormIdeal, samples: u64, seed: u64) -> Vec<AxiomViolation> {
    use rand::Rng as _;
    use rand::SeedableRng as _;

    let mut violations = Vec::new();
    let ring = form.ring();
    let mut check = |axiom: char, witness: String, member: bool| {
        if !member {
            violations.push(AxiomViolation { axiom, witness });
        }
    };
    match ring {
        RingSpec::Mod(_) => {
            let two = Scalar::new(ring, 2);
            for a in form.ideal_elements() {
                check(
                    'a',
                    format!("a={a}"),
                    form.gamma_member(&(&two * &a)).unwrap(),
                );
                for r in ring.elements() {
                    check(
                        'b',
                        format!("r={r} a={a}"),
                        form.gamma_member(&(&r * &a * &a)).unwrap(),
                    );
                }
            }
            for alpha in form.gamma_elements() {
                for r in ring.elements() {
                    check(
                        'c',
                        format!("alpha={alpha} r={r}"),
                        form.gamma_member(&(&alpha * &r * &r)).unwrap(),
                    );
                }
            }
        }
        RingSpec::Integers => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let bound = 8i128;
            let d = form.ideal_gcd();
            let dg = form.gamma_gcd();
            let two = Scalar::new(ring, 2);
            for _ in 0..samples {
                let a =
                    Scalar::from_int(ring, d.mul_ref(&Int::from(rng.gen_range(-bound..=bound))));
                let r = Scalar::new(ring, rng.gen_range(-bound..=bound));
                let alpha =
                    Scalar::from_int(ring, dg.mul_ref(&Int::from(rng.gen_range(-bound..=bound))));
                check(
                    'a',
                    format!("a={a}"),
                    form.gamma_member(&(&two * &a)).unwrap(),
                );
                check(
                    'b',
                    format!("r={r} a={a}"),
                    form.gamma_member(&(&r * &a * &a)).unwrap(),
                );
                check(
                    'c',
                    format!("alpha={alpha} r={r}"),
                    form.gamma_member(&(&alpha * &r * &r)).unwrap(),
                );
            }
        }
    }
    violations
}
