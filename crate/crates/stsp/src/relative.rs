//! The relative symplectic Steinberg group for a form ideal `(I, Γ)`.
//!
//! Elements are words in formal conjugates `^g Y_ij(a)`: the free group on
//! symbols `(g, x)` with `g` an absolute word and `x` a relative generator,
//! acted on by the absolute group via `^f(g, x) = (fg, x)`. Conjugations
//! are never pushed inward using the defining relations KL0–KL7; those
//! relations are exactly what the verification suite checks on matrix
//! images.
//!
//! The evaluation map sends `(g, Y_ij(a))` to `φ(g)·T_ij(a)·φ(g)⁻¹`. Its
//! restriction to a unipotent radical `U_i` is injective, which upgrades
//! matrix equality to genuine group equality there and makes normal-form
//! coefficients matrix-readable.

use std::fmt;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::ring::{FormIdeal, RingSpec, Scalar};
use crate::sample::{binding, seeded_rng, Sampler, StratifiedIndices, VerifyConfig};
use crate::space::{half_pairing, HVector, Idx};
use crate::steinberg::{AbsGen, AbsWord, Sign};
use crate::transvection::{elementary_transvection, SpMatrix};

/// A relative generator `Y_ij(a)`: for `j ≠ -i` the parameter must lie in
/// `I`, for the long roots `j = -i` in `Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelGen {
    pub i: Idx,
    pub j: Idx,
    pub a: Scalar,
}

impl RelGen {
    pub fn new(i: Idx, j: Idx, a: Scalar, form: &FormIdeal) -> Result<RelGen> {
        if i == j {
            return Err(Error::EqualIndices(i.get() as i64));
        }
        if j == i.opposite() {
            if !form.gamma_member(&a)? {
                return Err(Error::NotInGamma(format!("long parameter {a}")));
            }
        } else if !form.ideal_member(&a)? {
            return Err(Error::NotInIdeal(format!("short parameter {a}")));
        }
        Ok(RelGen { i, j, a })
    }

    pub fn is_long(&self) -> bool {
        self.j == self.i.opposite()
    }

    pub fn matrix(&self, rank: usize, sign: Sign) -> SpMatrix {
        let a = match sign {
            Sign::Pos => self.a.clone(),
            Sign::Neg => -&self.a,
        };
        elementary_transvection(rank, self.i, self.j, a).expect("valid generator")
    }
}

impl fmt::Display for RelGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y({},{};{})", self.i, self.j, self.a)
    }
}

/// A formal conjugate `^g Y_ij(a)` with an orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelAtom {
    pub g: AbsWord,
    pub x: RelGen,
    pub sign: Sign,
}

/// A word in formal conjugates: an element of the relative Steinberg group
/// presented on `(g, x)` symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelWord {
    rank: usize,
    ring: RingSpec,
    atoms: Vec<RelAtom>,
}

impl RelWord {
    pub fn identity(rank: usize, ring: RingSpec) -> RelWord {
        RelWord {
            rank,
            ring,
            atoms: Vec::new(),
        }
    }

    /// A single generator with the trivial conjugator.
    pub fn generator(rank: usize, x: RelGen) -> RelWord {
        let ring = x.a.ring();
        RelWord {
            rank,
            ring,
            atoms: vec![RelAtom {
                g: AbsWord::identity(rank, ring),
                x,
                sign: Sign::Pos,
            }],
        }
    }

    pub fn from_atoms(rank: usize, ring: RingSpec, atoms: Vec<RelAtom>) -> RelWord {
        RelWord { rank, ring, atoms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn atoms(&self) -> &[RelAtom] {
        &self.atoms
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn push(&mut self, atom: RelAtom) {
        self.atoms.push(atom);
    }

    pub fn mul(&self, other: &RelWord) -> RelWord {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        RelWord {
            rank: self.rank,
            ring: self.ring,
            atoms,
        }
    }

    pub fn inv(&self) -> RelWord {
        RelWord {
            rank: self.rank,
            ring: self.ring,
            atoms: self
                .atoms
                .iter()
                .rev()
                .map(|a| RelAtom {
                    g: a.g.clone(),
                    x: a.x.clone(),
                    sign: a.sign.flip(),
                })
                .collect(),
        }
    }

    /// Cancels adjacent identical atoms with opposite orientations.
    pub fn reduced(&self) -> RelWord {
        let mut stack: Vec<RelAtom> = Vec::with_capacity(self.atoms.len());
        for atom in &self.atoms {
            match stack.last() {
                Some(top) if top.g == atom.g && top.x == atom.x && top.sign == atom.sign.flip() => {
                    stack.pop();
                }
                _ => stack.push(atom.clone()),
            }
        }
        RelWord {
            rank: self.rank,
            ring: self.ring,
            atoms: stack,
        }
    }

    /// Evaluation to a matrix: the product over atoms of
    /// `φ(g)·T_x^{±1}·φ(g)⁻¹`.
    ///
    /// Consecutive atoms sharing a conjugator reuse its evaluated pair, which
    /// is the common case for words built by the generator calculus.
    pub fn eval(&self) -> SpMatrix {
        let mut acc = SpMatrix::identity(self.rank, self.ring);
        let mut cache: Option<(&AbsWord, SpMatrix, SpMatrix)> = None;
        for atom in &self.atoms {
            let hit = matches!(&cache, Some((g, _, _)) if **g == atom.g);
            if !hit {
                let m = atom.g.eval();
                let minv = atom.g.inv().eval();
                cache = Some((&atom.g, m, minv));
            }
            let (_, m, minv) = cache.as_ref().unwrap();
            let t = atom.x.matrix(self.rank, atom.sign);
            if atom.g.is_empty() {
                acc = acc.mul(&t);
            } else {
                acc = acc.mul(m).mul(&t).mul(minv);
            }
        }
        acc
    }

    /// The action `^f`: prefixes `f` to every atom's conjugator.
    pub fn act(&self, f: &AbsWord) -> RelWord {
        RelWord {
            rank: self.rank,
            ring: self.ring,
            atoms: self
                .atoms
                .iter()
                .map(|a| RelAtom {
                    g: f.mul(&a.g).reduced(),
                    x: a.x.clone(),
                    sign: a.sign,
                })
                .collect(),
        }
    }

    /// Rewrites every atom `(g, Y_ij(a))` as absolute letters
    /// `g·X_ij(a)·g⁻¹`. Meaningful in the absolute situation `(I, Γ) = (R, R)`.
    pub fn flatten_abs(&self) -> AbsWord {
        let mut out = AbsWord::identity(self.rank, self.ring);
        for atom in &self.atoms {
            let x = AbsWord::generator(
                self.rank,
                AbsGen::new(atom.x.i, atom.x.j, atom.x.a.clone()).unwrap(),
            );
            let x = match atom.sign {
                Sign::Pos => x,
                Sign::Neg => x.inv(),
            };
            out = out.mul(&atom.g.mul(&x).mul(&atom.g.inv()));
        }
        out.reduced()
    }
}

impl fmt::Display for RelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "1");
        }
        for (k, atom) in self.atoms.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if !atom.g.is_empty() {
                write!(f, "{} |> ", atom.g)?;
            }
            write!(f, "{}", atom.x)?;
            if atom.sign == Sign::Neg {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Boxed commutator `⟦g, h] = ^g h · h⁻¹` mixing the absolute action with
/// the group multiplication.
pub fn boxed_left(g: &AbsWord, h: &RelWord) -> RelWord {
    h.act(g).mul(&h.inv())
}

/// Boxed commutator `[h, g⟫ = h · ^g h⁻¹`.
pub fn boxed_right(h: &RelWord, g: &AbsWord) -> RelWord {
    h.mul(&h.inv().act(g))
}

/// Syntactic membership in the Steinberg parabolic subgroup: every letter
/// `X_kh(a)` satisfies `i ∉ {h, -k}`. Sufficient, not complete — a `false`
/// only means "not syntactically visible".
pub fn parabolic_member(i: Idx, w: &AbsWord) -> bool {
    w.letters()
        .iter()
        .all(|(g, _)| g.j != i && g.i != i.opposite())
}

/// Syntactic membership in the Levi subgroup `L_i = P_i ∩ P_{-i}`.
pub fn levi_member(i: Idx, w: &AbsWord) -> bool {
    parabolic_member(i, w) && parabolic_member(i.opposite(), w)
}

/// Normal-form data for an element of the unipotent radical `U_i`: the
/// coefficients of `Y_{i,-i}(α)·Y_{i,-l}(a_{-l})⋯Y_{i,l}(a_l)` in basis
/// order (skipping `±i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentCoeffs {
    pub pivot: Idx,
    pub alpha: Scalar,
    /// `(j, a_j)` pairs in storage order, `j ∉ {±i}`, zeros included.
    pub coeffs: Vec<(Idx, Scalar)>,
}

impl UnipotentCoeffs {
    /// The normal-form word these coefficients describe.
    pub fn rebuild(&self, rank: usize, form: &FormIdeal) -> Result<RelWord> {
        let ring = form.ring();
        let mut w = RelWord::identity(rank, ring);
        if !self.alpha.is_zero() {
            w.push(RelAtom {
                g: AbsWord::identity(rank, ring),
                x: RelGen::new(self.pivot, self.pivot.opposite(), self.alpha.clone(), form)?,
                sign: Sign::Pos,
            });
        }
        for (j, a) in &self.coeffs {
            if a.is_zero() {
                continue;
            }
            w.push(RelAtom {
                g: AbsWord::identity(rank, ring),
                x: RelGen::new(self.pivot, *j, a.clone(), form)?,
                sign: Sign::Pos,
            });
        }
        Ok(w)
    }
}

impl fmt::Display for UnipotentCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={}", self.alpha)?;
        for (j, a) in &self.coeffs {
            write!(f, " a_{j}={a}")?;
        }
        Ok(())
    }
}

/// Reads unipotent normal-form coefficients off designated matrix entries
/// and accepts only if rebuilding reproduces the matrix exactly and every
/// coefficient satisfies its `I`/`Γ` membership.
///
/// For `M = T(e_i, v, c)` the candidate data sit in column `-i`:
/// `v_j = M[j,-i]·ε_i` for `j ∉ {±i}` and the long entry `M[i,-i]·ε_i`
/// equals `c + 2v_i`; everything else must look like the identity.
pub fn recognize_unipotent_matrix(
    i: Idx,
    m: &SpMatrix,
    form: &FormIdeal,
) -> Result<UnipotentCoeffs> {
    let rank = m.rank();
    let ring = m.ring();
    let fail = |reason: &str| Error::NotUnipotent {
        pivot: i.get() as i64,
        reason: reason.to_string(),
    };
    // Candidate vector from column -i.
    let mut v = HVector::zero(rank, ring);
    for j in Idx::all(rank) {
        if j == i || j == i.opposite() {
            continue;
        }
        v.set_coord(j, m.entry(j, i.opposite()) * i.eps(ring));
    }
    let c_long = m.entry(i, i.opposite()) * i.eps(ring);
    let alpha = c_long + half_pairing(&v);
    let mut coeffs = Vec::new();
    for k in Idx::all(rank) {
        if k == i || k == i.opposite() {
            continue;
        }
        let a_k = v.coord(k.opposite()) * k.opposite().eps(ring);
        coeffs.push((k, a_k));
    }
    // Membership before rebuilding, so the error names the right failure.
    if !form.gamma_member(&alpha)? {
        return Err(Error::NotInGamma(format!("long coefficient {alpha}")));
    }
    for (k, a) in &coeffs {
        if !form.ideal_member(a)? {
            return Err(Error::NotInIdeal(format!("coefficient a_{k}={a}")));
        }
    }
    let out = UnipotentCoeffs {
        pivot: i,
        alpha,
        coeffs,
    };
    let rebuilt = out.rebuild(rank, form)?.eval();
    if rebuilt != *m {
        return Err(fail("rebuild mismatch"));
    }
    Ok(out)
}

/// Normal form of a unipotent-radical word: unique coefficients such that
/// the rebuilt product has the same image, computed through the matrix.
pub fn unipotent_normal_form(i: Idx, w: &RelWord, form: &FormIdeal) -> Result<UnipotentCoeffs> {
    recognize_unipotent_matrix(i, &w.eval(), form)
}

/// A random word in the generators of `U_pivot` (trivial conjugators).
pub fn random_unipotent_word(s: &mut Sampler<'_>, pivot: Idx, len: usize) -> RelWord {
    use rand::Rng as _;
    let rank = s.rank;
    let ring = s.ring;
    let mut w = RelWord::identity(rank, ring);
    for _ in 0..len {
        let long = s.rng.gen_bool(0.3);
        let x = if long {
            RelGen::new(pivot, pivot.opposite(), s.gamma_scalar(), s.form).unwrap()
        } else {
            let j = loop {
                let j = s.index();
                if j != pivot && j != pivot.opposite() {
                    break j;
                }
            };
            RelGen::new(pivot, j, s.ideal_scalar(), s.form).unwrap()
        };
        let sign = if s.rng.gen_bool(0.5) {
            Sign::Pos
        } else {
            Sign::Neg
        };
        w.push(RelAtom {
            g: AbsWord::identity(rank, ring),
            x,
            sign,
        });
    }
    w
}

/// A random absolute word whose letters all satisfy the parabolic (or Levi)
/// index condition at `i`.
pub fn random_parabolic_word(s: &mut Sampler<'_>, i: Idx, levi: bool, len: usize) -> AbsWord {
    use rand::Rng as _;
    let rank = s.rank;
    let ring = s.ring;
    let mut valid: Vec<(Idx, Idx)> = Vec::new();
    for k in Idx::all(rank) {
        for h in Idx::all(rank) {
            if k == h {
                continue;
            }
            let para = h != i && k != i.opposite();
            let para_opp = h != i.opposite() && k != i;
            if para && (!levi || para_opp) {
                valid.push((k, h));
            }
        }
    }
    let mut w = AbsWord::identity(rank, ring);
    for _ in 0..len {
        let (k, h) = valid[s.rng.gen_range(0..valid.len())];
        let r = s.scalar();
        let sign = if s.rng.gen_bool(0.5) {
            Sign::Pos
        } else {
            Sign::Neg
        };
        w.push(AbsGen::new(k, h, r).unwrap(), sign);
    }
    w
}

pub const KL_FAMILIES: [&str; 8] = ["KL0", "KL1", "KL2", "KL3", "KL4", "KL5", "KL6", "KL7"];

fn rel_gen_word(rank: usize, i: Idx, j: Idx, a: Scalar, form: &FormIdeal) -> Result<RelWord> {
    Ok(RelWord::generator(rank, RelGen::new(i, j, a, form)?))
}

fn abs_gen_word(rank: usize, i: Idx, j: Idx, r: Scalar) -> AbsWord {
    AbsWord::generator(rank, AbsGen::new(i, j, r).unwrap())
}

/// Draws a parameter valid for the generator `Y_{ij}`: from `Γ` on long
/// roots, from `I` otherwise.
fn rel_param(s: &mut Sampler<'_>, i: Idx, j: Idx) -> Scalar {
    if j == i.opposite() {
        s.gamma_scalar()
    } else {
        s.ideal_scalar()
    }
}

/// Checks the relative Steinberg relation families KL0–KL7 on images for
/// stratified random draws with `a ∈ I`, `α ∈ Γ`, `r ∈ R`.
pub fn verify_kl_relations(cfg: &VerifyConfig) -> Report {
    let mut report = Report::new();
    let mut rng = seeded_rng(cfg.seed);
    let rank = cfg.rank;
    let ring = cfg.ring;
    let two = Scalar::new(ring, 2);

    for family in KL_FAMILIES {
        let indices = match family {
            "KL0" | "KL1" => StratifiedIndices::new(rank, 2, |t| t[0] != t[1]),
            "KL2" => StratifiedIndices::new(rank, 4, |t| {
                let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                i != j && h != k && h != j && h != i.opposite() && k != i && k != j.opposite()
            }),
            "KL3" => StratifiedIndices::new(rank, 3, |t| {
                let (i, j, k) = (t[0], t[1], t[2]);
                i != j
                    && j != k
                    && i != k
                    && i != j.opposite()
                    && i != k.opposite()
                    && j != k.opposite()
            }),
            "KL4" | "KL5" | "KL6" => {
                StratifiedIndices::new(rank, 2, |t| t[0] != t[1] && t[0] != t[1].opposite())
            }
            "KL7" => StratifiedIndices::new(rank, 4, |t| t[0] != t[1] && t[2] != t[3]),
            _ => unreachable!(),
        };
        for case in 0..cfg.trials {
            let t = indices.pick(case, &mut rng).to_vec();
            let mut s = Sampler::new(cfg, &mut rng);
            let form = cfg.form.clone();
            let (bind, lhs, rhs) = match family {
                "KL0" => {
                    let (i, j) = (t[0], t[1]);
                    let a = rel_param(&mut s, i, j);
                    let lhs = rel_gen_word(rank, i, j, a.clone(), &form).unwrap();
                    let rhs = rel_gen_word(
                        rank,
                        j.opposite(),
                        i.opposite(),
                        -&a * i.eps(ring) * j.eps(ring),
                        &form,
                    )
                    .unwrap();
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("a", a.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL1" => {
                    let (i, j) = (t[0], t[1]);
                    let a = rel_param(&mut s, i, j);
                    let b = rel_param(&mut s, i, j);
                    let lhs = rel_gen_word(rank, i, j, a.clone(), &form)
                        .unwrap()
                        .mul(&rel_gen_word(rank, i, j, b.clone(), &form).unwrap());
                    let rhs = rel_gen_word(rank, i, j, &a + &b, &form).unwrap();
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("a", a.to_string()),
                            ("b", b.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL2" => {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    let r = s.scalar();
                    let a = rel_param(&mut s, h, k);
                    let y = rel_gen_word(rank, h, k, a.clone(), &form).unwrap();
                    let lhs = boxed_left(&abs_gen_word(rank, i, j, r.clone()), &y);
                    let rhs = RelWord::identity(rank, ring);
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("h", h.to_string()),
                            ("k", k.to_string()),
                            ("r", r.to_string()),
                            ("a", a.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL3" => {
                    let (i, j, k) = (t[0], t[1], t[2]);
                    let r = s.scalar();
                    let a = s.ideal_scalar();
                    let y = rel_gen_word(rank, j, k, a.clone(), &form).unwrap();
                    let lhs = boxed_left(&abs_gen_word(rank, i, j, r.clone()), &y);
                    let rhs = rel_gen_word(rank, i, k, &r * &a, &form).unwrap();
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("k", k.to_string()),
                            ("r", r.to_string()),
                            ("a", a.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL4" => {
                    let (i, j) = (t[0], t[1]);
                    let r = s.scalar();
                    let a = s.ideal_scalar();
                    let y = rel_gen_word(rank, i.opposite(), j, a.clone(), &form).unwrap();
                    let lhs = boxed_left(&abs_gen_word(rank, i, i.opposite(), r.clone()), &y);
                    let rhs = rel_gen_word(rank, i, j, &r * &a * i.eps(ring), &form)
                        .unwrap()
                        .mul(&rel_gen_word(rank, j.opposite(), j, -&r * &a * &a, &form).unwrap());
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("r", r.to_string()),
                            ("a", a.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL5" => {
                    let (i, j) = (t[0], t[1]);
                    let alpha = s.gamma_scalar();
                    let r = s.scalar();
                    let y = rel_gen_word(rank, i, i.opposite(), alpha.clone(), &form).unwrap();
                    let lhs = boxed_right(&y, &abs_gen_word(rank, i.opposite(), j, r.clone()));
                    let rhs = rel_gen_word(rank, i, j, &alpha * &r * i.eps(ring), &form)
                        .unwrap()
                        .mul(
                            &rel_gen_word(rank, j.opposite(), j, -&alpha * &r * &r, &form).unwrap(),
                        );
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("alpha", alpha.to_string()),
                            ("r", r.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL6" => {
                    let (i, j) = (t[0], t[1]);
                    let r = s.scalar();
                    let a = s.ideal_scalar();
                    let y = rel_gen_word(rank, j, i.opposite(), a.clone(), &form).unwrap();
                    let lhs = boxed_left(&abs_gen_word(rank, i, j, r.clone()), &y);
                    // The right-hand side is the long-root relative
                    // generator with parameter 2raε_i, in Γ by the doubling
                    // axiom.
                    let rhs =
                        rel_gen_word(rank, i, i.opposite(), &two * &r * &a * i.eps(ring), &form)
                            .unwrap();
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("r", r.to_string()),
                            ("a", a.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL7" => {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    // a ∈ I (and in Γ on long roots so Y_ij(a) exists).
                    let a = rel_param(&mut s, i, j);
                    let b = rel_param(&mut s, h, k);
                    let target = rel_gen_word(rank, h, k, b.clone(), &form).unwrap();
                    let lhs = target.act(&abs_gen_word(rank, i, j, a.clone()));
                    let y = rel_gen_word(rank, i, j, a.clone(), &form).unwrap();
                    let rhs = y.mul(&target).mul(&y.inv());
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("h", h.to_string()),
                            ("k", k.to_string()),
                            ("a", a.to_string()),
                            ("b", b.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                _ => unreachable!(),
            };
            let pass = lhs.eval() == rhs.eval();
            report.push("kl", family, case, bind, pass, None);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GammaMode;
    use crate::steinberg::random_elementary_column;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn idx(i: i32) -> Idx {
        Idx::new(i, 3).unwrap()
    }

    fn sc(v: i128) -> Scalar {
        Scalar::new(z(), v)
    }

    fn full_cfg(seed: u64) -> VerifyConfig {
        VerifyConfig::new(z(), 3, FormIdeal::full(z()), 30, seed).with_bound(4)
    }

    #[test]
    fn generator_membership_is_enforced() {
        let ring = RingSpec::modulo(12).unwrap();
        let f = FormIdeal::new(ring, vec![Scalar::new(ring, 4)], GammaMode::Maximal).unwrap();
        assert!(RelGen::new(idx(1), idx(2), Scalar::new(ring, 4), &f).is_ok());
        assert!(RelGen::new(idx(1), idx(2), Scalar::new(ring, 3), &f).is_err());
        let fmin = FormIdeal::new(ring, vec![Scalar::new(ring, 2)], GammaMode::Minimal).unwrap();
        // Γ_min over ℤ/12 with I = (2) is {0, 4, 8}.
        assert!(RelGen::new(idx(1), idx(-1), Scalar::new(ring, 4), &fmin).is_ok());
        assert!(RelGen::new(idx(1), idx(-1), Scalar::new(ring, 2), &fmin).is_err());
    }

    #[test]
    fn single_atom_evaluates_to_a_transvection() {
        let f = FormIdeal::full(z());
        let w = rel_gen_word(3, idx(1), idx(2), sc(5), &f).unwrap();
        assert_eq!(
            w.eval(),
            elementary_transvection(3, idx(1), idx(2), sc(5)).unwrap()
        );
        assert!(RelWord::identity(3, z()).eval().is_identity());
        assert!(w.mul(&w.inv()).eval().is_identity());
        assert!(w.mul(&w.inv()).reduced().is_empty());
    }

    #[test]
    fn action_prefixes_and_cancels() {
        let f = FormIdeal::full(z());
        let cfg = full_cfg(2);
        let mut rng = seeded_rng(2);
        let w = {
            let mut s = Sampler::new(&cfg, &mut rng);
            random_unipotent_word(&mut s, idx(1), 4)
        };
        let g = random_elementary_column(&mut rng, z(), 3, 3, 3)
            .word()
            .clone();
        // Identity action does nothing.
        assert_eq!(w.act(&AbsWord::identity(3, z())), w);
        // act(f, act(f^{-1}, w)) = w after reduction of conjugators.
        assert_eq!(w.act(&g.inv()).act(&g), w);
        // Image conjugation identity.
        let m = g.eval();
        assert_eq!(w.act(&g).eval(), m.mul(&w.eval()).mul(&g.inv().eval()));
        let _ = f;
    }

    #[test]
    fn action_composes_on_images() {
        let cfg = full_cfg(12);
        let mut rng = seeded_rng(12);
        for _ in 0..10 {
            let w = {
                let mut s = Sampler::new(&cfg, &mut rng);
                random_unipotent_word(&mut s, idx(2), 3)
            };
            let f1 = random_elementary_column(&mut rng, z(), 3, 3, 3)
                .word()
                .clone();
            let f2 = random_elementary_column(&mut rng, z(), 3, 3, 3)
                .word()
                .clone();
            assert_eq!(w.act(&f2).act(&f1).eval(), w.act(&f1.mul(&f2)).eval());
        }
    }

    #[test]
    fn parabolic_and_levi_membership() {
        let i = idx(1);
        // X_kh(a) with i ∉ {h, -k} is parabolic at i.
        let w = abs_gen_word(3, idx(2), idx(3), sc(1));
        assert!(parabolic_member(i, &w));
        assert!(parabolic_member(i, &AbsWord::identity(3, z())));
        let bad = abs_gen_word(3, idx(2), idx(1), sc(1));
        assert!(!parabolic_member(i, &bad));
        // Levi words fix e_i and e_{-i}.
        let cfg = full_cfg(4);
        let mut rng = seeded_rng(4);
        for _ in 0..20 {
            let g = {
                let mut s = Sampler::new(&cfg, &mut rng);
                random_parabolic_word(&mut s, i, true, 5)
            };
            assert!(levi_member(i, &g));
            let m = g.eval();
            assert_eq!(
                m.apply(&HVector::basis(3, z(), i)).unwrap(),
                HVector::basis(3, z(), i)
            );
            assert_eq!(
                m.apply(&HVector::basis(3, z(), i.opposite())).unwrap(),
                HVector::basis(3, z(), i.opposite())
            );
        }
    }

    #[test]
    fn recognize_identity_and_reject_lower_transvection() {
        let f = FormIdeal::full(z());
        let got = recognize_unipotent_matrix(idx(1), &SpMatrix::identity(3, z()), &f).unwrap();
        assert!(got.alpha.is_zero());
        assert!(got.coeffs.iter().all(|(_, a)| a.is_zero()));
        // T_{-1,1}(1) moves e_1, impossible inside φ(U_1).
        let m = elementary_transvection(3, idx(-1), idx(1), sc(1)).unwrap();
        assert!(recognize_unipotent_matrix(idx(1), &m, &f).is_err());
    }

    #[test]
    fn normal_form_round_trips() {
        let ring = z();
        let f = FormIdeal::new(ring, vec![sc(2)], GammaMode::Minimal).unwrap();
        let cfg = VerifyConfig::new(ring, 3, f, 1, 6).with_bound(3);
        let mut rng = seeded_rng(6);
        for pivot in [idx(1), idx(-2), idx(3)] {
            for _ in 0..20 {
                let w = {
                    let mut s = Sampler::new(&cfg, &mut rng);
                    random_unipotent_word(&mut s, pivot, 5)
                };
                let nf = unipotent_normal_form(pivot, &w, &cfg.form).unwrap();
                let rebuilt = nf.rebuild(3, &cfg.form).unwrap();
                assert_eq!(rebuilt.eval(), w.eval());
                // Normal form of the rebuild is the same coefficient tuple.
                let nf2 = unipotent_normal_form(pivot, &rebuilt, &cfg.form).unwrap();
                assert_eq!(nf, nf2);
            }
        }
    }

    #[test]
    fn merged_coefficient_read_from_the_matrix() {
        // Y_{1,2}(a)·Y_{1,2}(b) has normal-form coefficient a+b at j = 2.
        let f = FormIdeal::full(z());
        let w = rel_gen_word(3, idx(1), idx(2), sc(3), &f)
            .unwrap()
            .mul(&rel_gen_word(3, idx(1), idx(2), sc(4), &f).unwrap());
        let nf = unipotent_normal_form(idx(1), &w, &f).unwrap();
        let at2: Vec<Scalar> = nf
            .coeffs
            .iter()
            .filter(|(j, _)| *j == idx(2))
            .map(|(_, a)| a.clone())
            .collect();
        assert_eq!(at2, vec![sc(7)]);
        // Empty word: all-zero coefficients.
        let nf0 = unipotent_normal_form(idx(1), &RelWord::identity(3, z()), &f).unwrap();
        assert!(nf0.alpha.is_zero());
        assert!(nf0.coeffs.iter().all(|(_, a)| a.is_zero()));
        // A lone long generator: (α; all zero).
        let w = rel_gen_word(3, idx(2), idx(-2), sc(5), &f).unwrap();
        let nf = unipotent_normal_form(idx(2), &w, &f).unwrap();
        assert_eq!(nf.alpha, sc(5));
        assert!(nf.coeffs.iter().all(|(_, a)| a.is_zero()));
    }

    #[test]
    fn levi_decomposition_on_images() {
        // For parabolic g and a U_i word u, ^g u is recognized in U_i.
        let ring = z();
        let f = FormIdeal::new(ring, vec![sc(2)], GammaMode::Maximal).unwrap();
        let cfg = VerifyConfig::new(ring, 3, f, 1, 8).with_bound(2);
        let mut rng = seeded_rng(8);
        for _ in 0..15 {
            let i = idx(1);
            let (g, u) = {
                let mut s = Sampler::new(&cfg, &mut rng);
                let g = random_parabolic_word(&mut s, i, false, 4);
                let u = random_unipotent_word(&mut s, i, 4);
                (g, u)
            };
            let acted = u.act(&g);
            assert!(unipotent_normal_form(i, &acted, &cfg.form).is_ok());
        }
    }

    #[test]
    fn heisenberg_structure_on_images() {
        // [U_i, U_i] lands in the long-root center, and the center commutes
        // with everything in φ(U_i).
        let ring = z();
        let f = FormIdeal::new(ring, vec![sc(2)], GammaMode::Maximal).unwrap();
        let cfg = VerifyConfig::new(ring, 3, f, 1, 14).with_bound(2);
        let mut rng = seeded_rng(14);
        let i = idx(2);
        for _ in 0..15 {
            let (u, v) = {
                let mut s = Sampler::new(&cfg, &mut rng);
                (
                    random_unipotent_word(&mut s, i, 3),
                    random_unipotent_word(&mut s, i, 3),
                )
            };
            let comm = u.mul(&v).mul(&u.inv()).mul(&v.inv());
            let nf = unipotent_normal_form(i, &comm, &cfg.form).unwrap();
            assert!(nf.coeffs.iter().all(|(_, a)| a.is_zero()));
            // Long-center elements commute with φ(U_i).
            let alpha = {
                let mut s = Sampler::new(&cfg, &mut rng);
                s.gamma_scalar()
            };
            let center = rel_gen_word(3, i, i.opposite(), alpha, &cfg.form).unwrap();
            assert_eq!(center.mul(&u).eval(), u.mul(&center).eval());
        }
    }

    #[test]
    fn kl_suite_passes() {
        let ring = RingSpec::modulo(12).unwrap();
        for gamma in [GammaMode::Maximal, GammaMode::Minimal] {
            let f = FormIdeal::new(ring, vec![Scalar::new(ring, 4)], gamma).unwrap();
            let cfg = VerifyConfig::new(ring, 3, f, 25, 51);
            let rep = verify_kl_relations(&cfg);
            assert!(rep.passed(), "failures: {:?}", rep.failures().first());
        }
        // Rank four as well.
        let f = FormIdeal::new(ring, vec![Scalar::new(ring, 4)], GammaMode::Maximal).unwrap();
        let cfg = VerifyConfig::new(ring, 4, f, 10, 51);
        let rep = verify_kl_relations(&cfg);
        assert!(rep.passed(), "failures: {:?}", rep.failures().first());
    }
}
