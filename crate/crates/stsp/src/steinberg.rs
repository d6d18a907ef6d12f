//! The absolute symplectic Steinberg group as formal words.
//!
//! Elements are words in the generators `X_ij(r)`, `i ≠ j`, with free
//! reduction only: adjacent `g·g⁻¹` pairs cancel, but words are never
//! rewritten using the Steinberg relations (no confluent system exists to
//! rewrite with). Group identities are checked on matrix images under the
//! evaluation map `φ: X_ij(a) ↦ T_ij(a)`, which suffices to falsify every
//! stated relation.
//!
//! All commutators are left-normed: `[x, y] = x y x⁻¹ y⁻¹`.

use std::fmt;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::ring::{RingSpec, Scalar};
use crate::sample::{binding, seeded_rng, Sampler, StratifiedIndices, VerifyConfig};
use crate::space::{half_pairing, HVector, Idx};
use crate::transvection::{elementary_transvection, esd_matrix, SpMatrix};

/// Orientation of a letter inside a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A generator `X_ij(r)` of the absolute Steinberg group; `j = -i` gives the
/// long-root generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbsGen {
    pub i: Idx,
    pub j: Idx,
    pub r: Scalar,
}

impl AbsGen {
    pub fn new(i: Idx, j: Idx, r: Scalar) -> Result<AbsGen> {
        if i == j {
            return Err(Error::EqualIndices(i.get() as i64));
        }
        Ok(AbsGen { i, j, r })
    }

    /// The image `T_ij(r)` (or `T_ij(-r)` for an inverted letter).
    pub fn matrix(&self, rank: usize, sign: Sign) -> SpMatrix {
        let r = match sign {
            Sign::Pos => self.r.clone(),
            Sign::Neg => -&self.r,
        };
        elementary_transvection(rank, self.i, self.j, r).expect("valid generator")
    }
}

impl fmt::Display for AbsGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({},{};{})", self.i, self.j, self.r)
    }
}

/// A word in the absolute generators, with explicit letter orientations.
///
/// Free reduction is available on demand; same-root letters are *not*
/// merged.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbsWord {
    rank: usize,
    ring: RingSpec,
    letters: Vec<(AbsGen, Sign)>,
}

impl AbsWord {
    pub fn identity(rank: usize, ring: RingSpec) -> AbsWord {
        AbsWord {
            rank,
            ring,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, gen: AbsGen) -> AbsWord {
        let ring = gen.r.ring();
        AbsWord {
            rank,
            ring,
            letters: vec![(gen, Sign::Pos)],
        }
    }

    pub fn from_letters(rank: usize, ring: RingSpec, letters: Vec<(AbsGen, Sign)>) -> AbsWord {
        for (g, _) in &letters {
            assert_eq!(g.r.ring(), ring, "ring mismatch in word letter");
        }
        AbsWord {
            rank,
            ring,
            letters,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn letters(&self) -> &[(AbsGen, Sign)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, gen: AbsGen, sign: Sign) {
        assert_eq!(gen.r.ring(), self.ring, "ring mismatch in word letter");
        self.letters.push((gen, sign));
    }

    pub fn mul(&self, other: &AbsWord) -> AbsWord {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        AbsWord {
            rank: self.rank,
            ring: self.ring,
            letters,
        }
    }

    /// Reverses the word and flips every orientation.
    pub fn inv(&self) -> AbsWord {
        AbsWord {
            rank: self.rank,
            ring: self.ring,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(g, s)| (g.clone(), s.flip()))
                .collect(),
        }
    }

    /// `g h g⁻¹`.
    pub fn conj(&self, h: &AbsWord) -> AbsWord {
        self.mul(h).mul(&self.inv())
    }

    /// Left-normed commutator `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn comm(x: &AbsWord, y: &AbsWord) -> AbsWord {
        x.mul(y).mul(&x.inv()).mul(&y.inv())
    }

    /// Freely reduced form: cancels adjacent mutually inverse letters.
    pub fn reduced(&self) -> AbsWord {
        let mut stack: Vec<(AbsGen, Sign)> = Vec::with_capacity(self.letters.len());
        for (g, s) in &self.letters {
            match stack.last() {
                Some((top, ts)) if top == g && *ts == s.flip() => {
                    stack.pop();
                }
                _ => stack.push((g.clone(), *s)),
            }
        }
        AbsWord {
            rank: self.rank,
            ring: self.ring,
            letters: stack,
        }
    }

    /// The evaluation `φ`: the product of the letters' transvection
    /// matrices, inverse letters contributing `T_ij(-r)`.
    pub fn eval(&self) -> SpMatrix {
        let mut acc = SpMatrix::identity(self.rank, self.ring);
        for (g, s) in &self.letters {
            acc = acc.mul(&g.matrix(self.rank, *s));
        }
        acc
    }
}

impl fmt::Display for AbsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, (g, s)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
            if *s == Sign::Neg {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Word with image `T(e_i, v, a)`, for `v` with `v_{-i} = 0`:
/// the long letter `X_{i,-i}(a + 2v_i - ⟨v_-, v_+⟩)` followed by the short
/// letters `X_{j,-i}(v_j ε_i)` in basis order. Zero-parameter letters are
/// dropped.
pub fn abs_esd_word(i: Idx, v: &HVector, a: Scalar) -> Result<AbsWord> {
    let rank = v.rank();
    let ring = v.ring();
    if !v.coord(i.opposite()).is_zero() {
        return Err(Error::hypothesis(format!("v_{} ≠ 0", i.opposite())));
    }
    let mut w = AbsWord::identity(rank, ring);
    let two = Scalar::new(ring, 2);
    let long = a + two * v.coord(i) - half_pairing(v);
    if !long.is_zero() {
        w.push(AbsGen::new(i, i.opposite(), long)?, Sign::Pos);
    }
    for j in Idx::all(rank) {
        if j == i || j == i.opposite() {
            continue;
        }
        let c = v.coord(j) * i.eps(ring);
        if !c.is_zero() {
            w.push(AbsGen::new(j, i.opposite(), c)?, Sign::Pos);
        }
    }
    Ok(w)
}

/// Word with image `T(u, v, a)` for arbitrary orthogonal `u, v`.
///
/// Realized through the long-root generator calculus specialized to the
/// full form ideal `(R, R)`, then flattened back to absolute letters.
pub fn abs_x_word(u: &HVector, v: &HVector, a: &Scalar) -> Result<AbsWord> {
    crate::generators::abs_x_word(u, v, a)
}

/// A vector carried together with a witness word: the column
/// `eval(word)·e_base` of a product of elementary transvections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemColumn {
    word: AbsWord,
    base: Idx,
    vector: HVector,
}

impl ElemColumn {
    pub fn new(word: AbsWord, base: Idx) -> ElemColumn {
        let vector = word
            .eval()
            .apply(&HVector::basis(word.rank(), word.ring(), base))
            .expect("column evaluation");
        ElemColumn { word, base, vector }
    }

    /// The basis column `e_base` with the empty witness.
    pub fn trivial(rank: usize, ring: RingSpec, base: Idx) -> ElemColumn {
        ElemColumn::new(AbsWord::identity(rank, ring), base)
    }

    pub fn word(&self) -> &AbsWord {
        &self.word
    }

    pub fn base(&self) -> Idx {
        self.base
    }

    pub fn vector(&self) -> &HVector {
        &self.vector
    }

    pub fn rank(&self) -> usize {
        self.word.rank()
    }

    pub fn ring(&self) -> RingSpec {
        self.word.ring()
    }

    /// Re-checks the cached invariant `vector = eval(word)·e_base`.
    pub fn recheck(&self) -> bool {
        let e = HVector::basis(self.rank(), self.ring(), self.base);
        self.word.eval().apply(&e).unwrap() == self.vector
    }

    /// The column transformed by a symplectic element given as a word and
    /// its (consistent) matrix: vector and witness move together.
    pub fn transformed(&self, conj_word: &AbsWord, conj_matrix: &SpMatrix) -> ElemColumn {
        ElemColumn {
            word: conj_word.mul(&self.word).reduced(),
            base: self.base,
            vector: conj_matrix.apply(&self.vector).unwrap(),
        }
    }
}

impl fmt::Display for ElemColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(word={}, i={}, u={})",
            self.word, self.base, self.vector
        )
    }
}

/// Draws a witness word of `length` random letters with parameters bounded
/// by `bound`, plus a random base index.
pub fn random_elementary_column(
    rng: &mut rand_chacha::ChaCha8Rng,
    ring: RingSpec,
    rank: usize,
    length: usize,
    bound: i128,
) -> ElemColumn {
    use rand::Rng as _;
    let mut word = AbsWord::identity(rank, ring);
    for _ in 0..length {
        let (i, j) = loop {
            let i = random_index(rng, rank);
            let j = random_index(rng, rank);
            if i != j {
                break (i, j);
            }
        };
        let r = match ring {
            RingSpec::Integers => Scalar::new(ring, rng.gen_range(-bound..=bound)),
            RingSpec::Mod(m) => Scalar::new(ring, rng.gen_range(0..m) as i128),
        };
        let sign = if rng.gen_bool(0.5) {
            Sign::Pos
        } else {
            Sign::Neg
        };
        word.push(AbsGen::new(i, j, r).unwrap(), sign);
    }
    ElemColumn::new(word, random_index(rng, rank))
}

fn random_index(rng: &mut rand_chacha::ChaCha8Rng, rank: usize) -> Idx {
    use rand::Rng as _;
    let l = rank as i32;
    loop {
        let raw = rng.gen_range(-l..=l);
        if raw != 0 {
            return Idx::new(raw, rank).unwrap();
        }
    }
}

fn gen_word(rank: usize, i: Idx, j: Idx, r: Scalar) -> AbsWord {
    AbsWord::generator(rank, AbsGen::new(i, j, r).unwrap())
}

/// One relation instance: both sides as words, checked on images.
struct Instance {
    binding: String,
    lhs: AbsWord,
    rhs: AbsWord,
}

fn steinberg_instance(
    family: &str,
    t: &[Idx],
    params: &[Scalar],
    rank: usize,
    ring: RingSpec,
) -> Instance {
    let eps = |i: Idx| i.eps(ring);
    match family {
        "S0" => {
            let (i, j) = (t[0], t[1]);
            let r = params[0].clone();
            Instance {
                binding: binding(&[
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                    ("r", r.to_string()),
                ]),
                lhs: gen_word(rank, i, j, r.clone()),
                rhs: gen_word(rank, j.opposite(), i.opposite(), -&r * eps(i) * eps(j)),
            }
        }
        "S1" => {
            let (i, j) = (t[0], t[1]);
            let (r, s) = (params[0].clone(), params[1].clone());
            Instance {
                binding: binding(&[
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                    ("r", r.to_string()),
                    ("s", s.to_string()),
                ]),
                lhs: gen_word(rank, i, j, r.clone()).mul(&gen_word(rank, i, j, s.clone())),
                rhs: gen_word(rank, i, j, r + s),
            }
        }
        "S2" => {
            let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
            let (r, s) = (params[0].clone(), params[1].clone());
            Instance {
                binding: binding(&[
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                    ("h", h.to_string()),
                    ("k", k.to_string()),
                    ("r", r.to_string()),
                    ("s", s.to_string()),
                ]),
                lhs: AbsWord::comm(&gen_word(rank, i, j, r), &gen_word(rank, h, k, s)),
                rhs: AbsWord::identity(rank, ring),
            }
        }
        "S3" => {
            let (i, j, k) = (t[0], t[1], t[2]);
            let (r, s) = (params[0].clone(), params[1].clone());
            Instance {
                binding: binding(&[
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                    ("k", k.to_string()),
                    ("r", r.to_string()),
                    ("s", s.to_string()),
                ]),
                lhs: AbsWord::comm(
                    &gen_word(rank, i, j, r.clone()),
                    &gen_word(rank, j, k, s.clone()),
                ),
                rhs: gen_word(rank, i, k, r * s),
            }
        }
        "S4" => {
            let (i, j) = (t[0], t[1]);
            let (r, s) = (params[0].clone(), params[1].clone());
            Instance {
                binding: binding(&[
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                    ("r", r.to_string()),
                    ("s", s.to_string()),
                ]),
                lhs: AbsWord::comm(
                    &gen_word(rank, i, i.opposite(), r.clone()),
                    &gen_word(rank, i.opposite(), j, s.clone()),
                ),
                rhs: gen_word(rank, i, j, &r * &s * eps(i)).mul(&gen_word(
                    rank,
                    j.opposite(),
                    j,
                    -&r * &s * &s,
                )),
            }
        }
        "S5" => {
            let (i, j) = (t[0], t[1]);
            let (r, s) = (params[0].clone(), params[1].clone());
            Instance {
                binding: binding(&[
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                    ("r", r.to_string()),
                    ("s", s.to_string()),
                ]),
                lhs: AbsWord::comm(
                    &gen_word(rank, i, j, r.clone()),
                    &gen_word(rank, j, i.opposite(), s.clone()),
                ),
                rhs: gen_word(rank, i, i.opposite(), Scalar::new(ring, 2) * r * s * eps(i)),
            }
        }
        _ => unreachable!("unknown family"),
    }
}

/// Index tuple validity per family. Side conditions follow the relation
/// statements; the sampler skips any tuple outside them. `S3` additionally
/// needs `i ≠ k` for the right-hand generator to exist.
fn family_indices(rank: usize, family: &str) -> StratifiedIndices {
    match family {
        "S0" | "S1" => StratifiedIndices::new(rank, 2, |t| t[0] != t[1]),
        "S2" => StratifiedIndices::new(rank, 4, |t| {
            let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
            i != j && h != k && h != j && h != i.opposite() && k != i && k != j.opposite()
        }),
        "S3" => StratifiedIndices::new(rank, 3, |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            i != j
                && j != k
                && i != k
                && i != j.opposite()
                && i != k.opposite()
                && j != k.opposite()
        }),
        "S4" | "S5" => StratifiedIndices::new(rank, 2, |t| t[0] != t[1] && t[0] != t[1].opposite()),
        _ => unreachable!(),
    }
}

pub const STEINBERG_FAMILIES: [&str; 6] = ["S0", "S1", "S2", "S3", "S4", "S5"];

fn family_param_count(family: &str) -> usize {
    if family == "S0" {
        1
    } else {
        2
    }
}

/// Checks the Steinberg relation families S0–S5 on matrix images for
/// stratified random draws.
pub fn verify_steinberg_relations(cfg: &VerifyConfig) -> Report {
    let mut report = Report::new();
    let mut rng = seeded_rng(cfg.seed);
    for family in STEINBERG_FAMILIES {
        let indices = family_indices(cfg.rank, family);
        for case in 0..cfg.trials {
            let tuple = indices.pick(case, &mut rng).to_vec();
            let params: Vec<Scalar> = {
                let mut s = Sampler::new(cfg, &mut rng);
                (0..family_param_count(family))
                    .map(|_| s.scalar())
                    .collect()
            };
            let inst = steinberg_instance(family, &tuple, &params, cfg.rank, cfg.ring);
            let pass = inst.lhs.eval() == inst.rhs.eval();
            report.push("steinberg", family, case, inst.binding, pass, None);
        }
    }
    report
}

/// Exhaustive parameter sweep for one fixed index tuple per family;
/// meaningful for small finite rings.
pub fn verify_steinberg_exhaustive(ring: RingSpec, rank: usize) -> Report {
    assert!(ring.is_finite(), "exhaustive sweep needs a finite ring");
    let mut report = Report::new();
    let idx = |i: i32| Idx::new(i, rank).unwrap();
    let fixed: [(&str, Vec<Idx>); 6] = [
        ("S0", vec![idx(1), idx(2)]),
        ("S1", vec![idx(1), idx(-2)]),
        ("S2", vec![idx(1), idx(2), idx(-2), idx(3)]),
        ("S3", vec![idx(1), idx(2), idx(3)]),
        ("S4", vec![idx(1), idx(2)]),
        ("S5", vec![idx(1), idx(2)]),
    ];
    for (family, tuple) in fixed {
        let elems: Vec<Scalar> = ring.elements().collect();
        let param_sets: Vec<Vec<Scalar>> = if family_param_count(family) == 1 {
            elems.iter().map(|r| vec![r.clone()]).collect()
        } else {
            elems
                .iter()
                .flat_map(|r| elems.iter().map(|s| vec![r.clone(), s.clone()]))
                .collect()
        };
        for (case, params) in param_sets.into_iter().enumerate() {
            let inst = steinberg_instance(family, &tuple, &params, rank, ring);
            let pass = inst.lhs.eval() == inst.rhs.eval();
            report.push(
                "steinberg-exhaustive",
                family,
                case as u64,
                inst.binding,
                pass,
                None,
            );
        }
    }
    report
}

/// Image checks for the coordinate-free presentation laws on `X(u, v, a)`
/// words: composition (same `u`), symmetry, and conjugation.
pub fn verify_abs_presentation(cfg: &VerifyConfig) -> Report {
    let mut report = Report::new();
    let mut rng = seeded_rng(cfg.seed);
    for case in 0..cfg.trials {
        let (u, v, w, a, b) = {
            let mut s = Sampler::new(cfg, &mut rng);
            let u = s.vector();
            let v = s.orthogonal_to(&u, &[], false);
            let w = s.orthogonal_to(&u, &[], false);
            (u, v, w, s.scalar(), s.scalar())
        };
        // P1: X(u,v,a)·X(u,w,b) = X(u, v+w, a+b+⟨v,w⟩) on images.
        let lhs = abs_x_word(&u, &v, &a)
            .unwrap()
            .mul(&abs_x_word(&u, &w, &b).unwrap());
        let c = &a + &b + crate::space::form(&v, &w).unwrap();
        let rhs = abs_x_word(&u, &v.add(&w), &c).unwrap();
        let pass = lhs.eval() == rhs.eval();
        report.push(
            "p-abs",
            "P1",
            case,
            binding(&[
                ("u", u.to_string()),
                ("v", v.to_string()),
                ("w", w.to_string()),
                ("a", a.to_string()),
                ("b", b.to_string()),
            ]),
            pass,
            None,
        );
    }
    for case in 0..cfg.trials {
        // P2: X(u, va, 0) and X(v, ua, 0) have equal images.
        let (u, v, a) = {
            let mut s = Sampler::new(cfg, &mut rng);
            let u = s.vector();
            let v = s.orthogonal_to(&u, &[], false);
            (u, v, s.scalar())
        };
        let lhs = abs_x_word(&u, &v.scale(&a), &Scalar::zero(cfg.ring)).unwrap();
        let rhs = abs_x_word(&v, &u.scale(&a), &Scalar::zero(cfg.ring)).unwrap();
        let pass = lhs.eval() == rhs.eval();
        report.push(
            "p-abs",
            "P2",
            case,
            binding(&[
                ("u", u.to_string()),
                ("v", v.to_string()),
                ("a", a.to_string()),
            ]),
            pass,
            None,
        );
    }
    for case in 0..cfg.trials {
        // P3: conjugation by X(u', v', b) transports the parameters.
        let (u, v, a, up, vp, b) = {
            let mut s = Sampler::new(cfg, &mut rng);
            let u = s.vector();
            let v = s.orthogonal_to(&u, &[], false);
            let up = s.vector();
            let vp = s.orthogonal_to(&up, &[], false);
            (u, v, s.scalar(), up, vp, s.scalar())
        };
        let outer = abs_x_word(&up, &vp, &b).unwrap();
        let inner = abs_x_word(&u, &v, &a).unwrap();
        let lhs = outer.conj(&inner);
        let m = esd_matrix(
            &crate::transvection::EsdParams::new(up.clone(), vp.clone(), b.clone()).unwrap(),
        );
        let rhs = abs_x_word(&m.apply(&u).unwrap(), &m.apply(&v).unwrap(), &a).unwrap();
        let pass = lhs.eval() == rhs.eval();
        report.push(
            "p-abs",
            "P3",
            case,
            binding(&[
                ("u", u.to_string()),
                ("v", v.to_string()),
                ("a", a.to_string()),
                ("u'", up.to_string()),
                ("v'", vp.to_string()),
                ("b", b.to_string()),
            ]),
            pass,
            None,
        );
    }
    report
}
