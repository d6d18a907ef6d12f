//! The relative van der Kallen presentation: generators `(u, v, a, b)` with
//! `u` a column of an elementary symplectic matrix, `⟨u, v⟩ = 0` and
//! `a, b ∈ I`, for the maximal form parameter `Γ = I`.
//!
//! A generator evaluates to the matrix `T(u, va, b)` — the image of the
//! long-root word `Z(u, v, a, b)`, whose pinned image law the generator
//! calculus tests keep honest. The suites here check the defining relations
//! T1–T7 on images, replay KL0–KL7 for the embedded `_ij` generators, and
//! drive both round trips between the relative Steinberg presentation and
//! this one.
//!
//! Columns always travel with their witness words; conjugation formulas
//! move the witness and the vector together.

use std::fmt;

use crate::error::{Error, Result};
use crate::generators::z_full_word;
use crate::relative::{RelGen, RelWord};
use crate::report::Report;
use crate::ring::{FormIdeal, RingSpec, Scalar};
use crate::sample::{binding, seeded_rng, Sampler, StratifiedIndices, VerifyConfig};
use crate::space::{form as pairing, split_pm, HVector, Idx};
use crate::steinberg::{abs_esd_word, AbsGen, AbsWord, ElemColumn, Sign};
use crate::transvection::{esd_matrix, transvection_params, EsdParams, SpMatrix};

/// A generator `(u, v, a, b)` of the van der Kallen group, with an
/// orientation. The first slot is an elementary column carried with its
/// witness word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VdKGen {
    u: ElemColumn,
    v: HVector,
    a: Scalar,
    b: Scalar,
    sign: Sign,
}

impl VdKGen {
    pub fn new(
        u: ElemColumn,
        v: HVector,
        a: Scalar,
        b: Scalar,
        form: &FormIdeal,
    ) -> Result<VdKGen> {
        u.vector().check_compat(&v)?;
        if !form_zero(u.vector(), &v)? {
            return Err(Error::hypothesis("⟨u, v⟩ ≠ 0"));
        }
        if !form.ideal_member(&a)? {
            return Err(Error::NotInIdeal(format!("a = {a}")));
        }
        if !form.ideal_member(&b)? {
            return Err(Error::NotInIdeal(format!("b = {b}")));
        }
        Ok(VdKGen {
            u,
            v,
            a,
            b,
            sign: Sign::Pos,
        })
    }

    pub fn column(&self) -> &ElemColumn {
        &self.u
    }

    pub fn v(&self) -> &HVector {
        &self.v
    }

    pub fn a(&self) -> Scalar {
        self.a.clone()
    }

    pub fn b(&self) -> Scalar {
        self.b.clone()
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn inverse(&self) -> VdKGen {
        let mut g = self.clone();
        g.sign = g.sign.flip();
        g
    }

    fn esd(&self) -> EsdParams {
        EsdParams::new(
            self.u.vector().clone(),
            self.v.scale(&self.a),
            self.b.clone(),
        )
        .expect("generator invariant")
    }

    /// The image `T(u, va, b)` (inverted for negative orientation).
    pub fn matrix(&self) -> SpMatrix {
        let p = self.esd();
        match self.sign {
            Sign::Pos => esd_matrix(&p),
            Sign::Neg => esd_matrix(&p.inverse()),
        }
    }
}

impl fmt::Display for VdKGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(word={}, i={}, v={}, a={}, b={})",
            self.u.word(),
            self.u.base(),
            self.v,
            self.a,
            self.b
        )?;
        if self.sign == Sign::Neg {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

fn form_zero(u: &HVector, v: &HVector) -> Result<bool> {
    Ok(pairing(u, v)?.is_zero())
}

/// A word in van der Kallen generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VdKWord {
    rank: usize,
    ring: RingSpec,
    gens: Vec<VdKGen>,
}

impl VdKWord {
    pub fn identity(rank: usize, ring: RingSpec) -> VdKWord {
        VdKWord {
            rank,
            ring,
            gens: Vec::new(),
        }
    }

    pub fn generator(gen: VdKGen) -> VdKWord {
        VdKWord {
            rank: gen.u.rank(),
            ring: gen.u.ring(),
            gens: vec![gen],
        }
    }

    pub fn gens(&self) -> &[VdKGen] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn mul(&self, other: &VdKWord) -> VdKWord {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        VdKWord {
            rank: self.rank,
            ring: self.ring,
            gens,
        }
    }

    pub fn inv(&self) -> VdKWord {
        VdKWord {
            rank: self.rank,
            ring: self.ring,
            gens: self.gens.iter().rev().map(VdKGen::inverse).collect(),
        }
    }

    /// Cancels adjacent identical generators with opposite orientations.
    pub fn reduced(&self) -> VdKWord {
        let mut stack: Vec<VdKGen> = Vec::new();
        for g in &self.gens {
            match stack.last() {
                Some(top)
                    if top.u == g.u
                        && top.v == g.v
                        && top.a == g.a
                        && top.b == g.b
                        && top.sign == g.sign.flip() =>
                {
                    stack.pop();
                }
                _ => stack.push(g.clone()),
            }
        }
        VdKWord {
            rank: self.rank,
            ring: self.ring,
            gens: stack,
        }
    }

    /// Evaluation: the product of the generators' images.
    pub fn eval(&self) -> SpMatrix {
        let mut acc = SpMatrix::identity(self.rank, self.ring);
        for g in &self.gens {
            acc = acc.mul(&g.matrix());
        }
        acc
    }
}

impl fmt::Display for VdKWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

pub fn vdk_eval(w: &VdKWord) -> SpMatrix {
    w.eval()
}

/// An absolute word with image `T(u, v, a)`: the explicit normal form when
/// `u` is a basis vector, the long-root calculus at `(R, R)` otherwise.
pub fn esd_params_word(p: &EsdParams) -> Result<AbsWord> {
    let rank = p.u().rank();
    for i in Idx::all(rank) {
        if *p.u() == HVector::basis(rank, p.u().ring(), i) {
            return abs_esd_word(i, p.v(), p.a());
        }
    }
    crate::generators::abs_x_word(p.u(), p.v(), &p.a())
}

/// The action `α_{u,v,a}`: applies `T(u, v, a)` to every generator's column
/// and vector, composing witness words with a word for the acting element.
pub fn vdk_act(p: &EsdParams, w: &VdKWord) -> Result<VdKWord> {
    let word = esd_params_word(p)?;
    let m = esd_matrix(p);
    act_with(&word, &m, w)
}

fn act_with(word: &AbsWord, m: &SpMatrix, w: &VdKWord) -> Result<VdKWord> {
    let gens = w
        .gens
        .iter()
        .map(|g| {
            Ok(VdKGen {
                u: g.u.transformed(word, m),
                v: m.apply(&g.v)?,
                a: g.a.clone(),
                b: g.b.clone(),
                sign: g.sign,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VdKWord {
        rank: w.rank,
        ring: w.ring,
        gens,
    })
}

/// A word-and-matrix pair realizing conjugation by the generator
/// `(u, v, a, b)`: the witness conjugation form
/// `g'·X(e_base, φ(g')⁻¹(va), b)·g'⁻¹`.
pub fn vdk_conj_data(g: &VdKGen) -> Result<(AbsWord, SpMatrix)> {
    let witness = g.u.word();
    let minv = witness.inv().eval();
    let inner = abs_esd_word(g.u.base(), &minv.apply(&g.v.scale(&g.a))?, g.b.clone())?;
    let word = witness.mul(&inner).mul(&witness.inv());
    let m = esd_matrix(&g.esd());
    Ok((word, m))
}

/// `ϖ`: generator-wise long-root words; image-preserving by the pinned
/// image law of `Z(u, v, a, b)`.
pub fn pi_map(w: &VdKWord, form: &FormIdeal) -> Result<RelWord> {
    let mut out = RelWord::identity(w.rank, w.ring);
    for g in &w.gens {
        let word = z_full_word(g.u.vector(), &g.v, &g.a, &g.b, form)?;
        out = match g.sign {
            Sign::Pos => out.mul(&word),
            Sign::Neg => out.mul(&word.inv()),
        };
    }
    Ok(out)
}

/// The embedded generator `_ij(a)`: `(e_{-j}, e_i, aε_{-j}, 0)` for short
/// roots and `(e_i, 0, 0, a)` for the long roots `j = -i`.
pub fn vdk_gen_ij(
    rank: usize,
    ring: RingSpec,
    i: Idx,
    j: Idx,
    a: Scalar,
    form: &FormIdeal,
) -> Result<VdKGen> {
    if i == j {
        return Err(Error::EqualIndices(i.get() as i64));
    }
    if j == i.opposite() {
        VdKGen::new(
            ElemColumn::trivial(rank, ring, i),
            HVector::zero(rank, ring),
            Scalar::zero(ring),
            a,
            form,
        )
    } else {
        VdKGen::new(
            ElemColumn::trivial(rank, ring, j.opposite()),
            HVector::basis(rank, ring, i),
            a * j.opposite().eps(ring),
            Scalar::zero(ring),
            form,
        )
    }
}

/// `ϱ`: sends `Y_ij(a)` to `_ij(a)` and realizes the conjugator through
/// the action, letter by letter.
pub fn rho_map(w: &RelWord, form: &FormIdeal) -> Result<VdKWord> {
    let rank = w.rank();
    let ring = w.ring();
    let mut out = VdKWord::identity(rank, ring);
    for atom in w.atoms() {
        let mut gen = vdk_gen_ij(rank, ring, atom.x.i, atom.x.j, atom.x.a.clone(), form)?;
        gen.sign = atom.sign;
        // ^{x₁⋯xₙ} y = ^{x₁}(⋯ ^{xₙ} y): apply the letters right to left.
        for (letter, letter_sign) in atom.g.letters().iter().rev() {
            let mut p = transvection_params(rank, letter.i, letter.j, letter.r.clone())?;
            if *letter_sign == Sign::Neg {
                p = p.inverse();
            }
            let word = AbsWord::from_letters(rank, ring, vec![(letter.clone(), *letter_sign)]);
            let m = esd_matrix(&p);
            gen = VdKGen {
                u: gen.u.transformed(&word, &m),
                v: m.apply(&gen.v)?,
                a: gen.a,
                b: gen.b,
                sign: gen.sign,
            };
        }
        out.gens.push(gen);
    }
    Ok(out)
}

/// Normal form of `(e_i, v, a, b)` (with `v_{-i} = 0`) as a product of
/// `_jk` generators:
/// `_{i,-i}(b + 2av_i - a²⟨ṽ_-, ṽ_+⟩) · Π_{j<0} _{j,-i}(av_jε_i) · Π_{j>0} _{j,-i}(av_jε_i)`,
/// the products running over `j ∉ {±i}` and `ṽ_±` omitting the `±i`
/// coordinates.
pub fn vdk_unipotent_decompose(g: &VdKGen, form: &FormIdeal) -> Result<VdKWord> {
    let rank = g.u.rank();
    let ring = g.u.ring();
    let mut pivot = None;
    for i in Idx::all(rank) {
        if *g.u.vector() == HVector::basis(rank, ring, i) {
            pivot = Some(i);
            break;
        }
    }
    let i = pivot.ok_or_else(|| Error::hypothesis("u is not a basis vector"))?;
    if !g.v.coord(i.opposite()).is_zero() {
        return Err(Error::hypothesis("v_{-i} ≠ 0"));
    }
    let trimmed = g.v.without_pair(i);
    let (tm, tp) = split_pm(&trimmed);
    let two = Scalar::new(ring, 2);
    let long = &g.b + two * &g.a * g.v.coord(i) - &g.a * &g.a * pairing(&tm, &tp)?;
    let mut out = VdKWord::identity(rank, ring);
    if !long.is_zero() {
        out.gens
            .push(vdk_gen_ij(rank, ring, i, i.opposite(), long, form)?);
    }
    for j in Idx::all(rank) {
        if j == i || j == i.opposite() {
            continue;
        }
        let c = &g.a * g.v.coord(j) * i.eps(ring);
        if c.is_zero() {
            continue;
        }
        out.gens
            .push(vdk_gen_ij(rank, ring, j, i.opposite(), c, form)?);
    }
    Ok(out)
}

fn require_maximal(form: &FormIdeal) -> Result<()> {
    if form.gamma_equals_ideal() {
        Ok(())
    } else {
        Err(Error::Config(
            "the van der Kallen presentation requires Γ = I".to_string(),
        ))
    }
}

fn gen_word(g: VdKGen) -> VdKWord {
    VdKWord::generator(g)
}

fn small_column(s: &mut Sampler<'_>, len: usize) -> ElemColumn {
    crate::steinberg::random_elementary_column(s.rng, s.ring, s.rank, len, 2)
}

fn column_orthogonal(s: &mut Sampler<'_>, col: &ElemColumn) -> HVector {
    let old = s.bound;
    s.bound = old.min(2);
    let x = s.vector_zero_at(&[col.base().opposite()]);
    s.bound = old;
    col.word().eval().apply(&x).unwrap()
}

/// Checks the van der Kallen relation families T1–T7 on images.
pub fn verify_t_relations(cfg: &VerifyConfig) -> Result<Report> {
    require_maximal(&cfg.form)?;
    let mut report = Report::new();
    let mut rng = seeded_rng(cfg.seed);
    let rank = cfg.rank;
    let ring = cfg.ring;
    const FAMILIES: [&str; 7] = ["T1", "T2", "T3", "T4", "T5", "T6", "T7"];
    for family in FAMILIES {
        for case in 0..cfg.trials {
            let mut s = Sampler::new(cfg, &mut rng);
            let fi = cfg.form.clone();
            // Witness words of varying length, up to six letters.
            let len = (case % 7) as usize;
            let (bind, lhs, rhs) = match family {
                "T1" => {
                    let u = small_column(&mut s, len);
                    let v = column_orthogonal(&mut s, &u);
                    let r = s.scalar();
                    let (a, b) = (s.ideal_scalar(), s.ideal_scalar());
                    let lhs = gen_word(VdKGen::new(
                        u.clone(),
                        v.scale(&r),
                        a.clone(),
                        b.clone(),
                        &fi,
                    )?);
                    let rhs = gen_word(VdKGen::new(u.clone(), v.clone(), &a * &r, b.clone(), &fi)?);
                    (
                        binding(&[
                            ("u", u.vector().to_string()),
                            ("v", v.to_string()),
                            ("r", r.to_string()),
                            ("a", a.to_string()),
                            ("b", b.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "T2" => {
                    let u = small_column(&mut s, len);
                    let v = column_orthogonal(&mut s, &u);
                    let w = column_orthogonal(&mut s, &u);
                    let (a, b, c) = (s.ideal_scalar(), s.ideal_scalar(), s.ideal_scalar());
                    let lhs = gen_word(VdKGen::new(
                        u.clone(),
                        v.clone(),
                        a.clone(),
                        b.clone(),
                        &fi,
                    )?)
                    .mul(&gen_word(VdKGen::new(
                        u.clone(),
                        w.clone(),
                        a.clone(),
                        c.clone(),
                        &fi,
                    )?));
                    let d = &b + &c + &a * &a * pairing(&v, &w)?;
                    let rhs = gen_word(VdKGen::new(u.clone(), v.add(&w), a.clone(), d, &fi)?);
                    (
                        binding(&[
                            ("u", u.vector().to_string()),
                            ("v", v.to_string()),
                            ("w", w.to_string()),
                            ("a", a.to_string()),
                            ("b", b.to_string()),
                            ("c", c.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "T3" => {
                    let u = small_column(&mut s, len);
                    let v = column_orthogonal(&mut s, &u);
                    let (a, b) = (s.ideal_scalar(), s.ideal_scalar());
                    let zero = Scalar::zero(ring);
                    let lhs = gen_word(VdKGen::new(
                        u.clone(),
                        v.clone(),
                        a.clone(),
                        zero.clone(),
                        &fi,
                    )?)
                    .mul(&gen_word(VdKGen::new(
                        u.clone(),
                        v.clone(),
                        b.clone(),
                        zero.clone(),
                        &fi,
                    )?));
                    let rhs = gen_word(VdKGen::new(u.clone(), v.clone(), &a + &b, zero, &fi)?);
                    (
                        binding(&[
                            ("u", u.vector().to_string()),
                            ("v", v.to_string()),
                            ("a", a.to_string()),
                            ("b", b.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "T4" => {
                    let (u, v) = shared_column_pair(&mut s, len);
                    let a = s.ideal_scalar();
                    let zero = Scalar::zero(ring);
                    let lhs = gen_word(VdKGen::new(
                        u.clone(),
                        v.vector().clone(),
                        a.clone(),
                        zero.clone(),
                        &fi,
                    )?);
                    let rhs = gen_word(VdKGen::new(
                        v.clone(),
                        u.vector().clone(),
                        a.clone(),
                        zero,
                        &fi,
                    )?);
                    (
                        binding(&[
                            ("u", u.vector().to_string()),
                            ("v", v.vector().to_string()),
                            ("a", a.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "T5" => {
                    let up = small_column(&mut s, 2);
                    let vp = column_orthogonal(&mut s, &up);
                    let u = small_column(&mut s, 2);
                    let v = column_orthogonal(&mut s, &u);
                    let (ap, bp, a, b) = (
                        s.ideal_scalar(),
                        s.ideal_scalar(),
                        s.ideal_scalar(),
                        s.ideal_scalar(),
                    );
                    let outer = gen_word(VdKGen::new(
                        up.clone(),
                        vp.clone(),
                        ap.clone(),
                        bp.clone(),
                        &fi,
                    )?);
                    let inner = gen_word(VdKGen::new(
                        u.clone(),
                        v.clone(),
                        a.clone(),
                        b.clone(),
                        &fi,
                    )?);
                    let lhs = outer.mul(&inner).mul(&outer.inv());
                    let (word, m) = vdk_conj_data(&outer.gens[0])?;
                    let rhs = gen_word(VdKGen::new(
                        u.transformed(&word, &m),
                        m.apply(&v)?,
                        a.clone(),
                        b.clone(),
                        &fi,
                    )?);
                    (
                        binding(&[
                            ("u'", up.vector().to_string()),
                            ("v'", vp.to_string()),
                            ("a'", ap.to_string()),
                            ("b'", bp.to_string()),
                            ("u", u.vector().to_string()),
                            ("v", v.to_string()),
                            ("a", a.to_string()),
                            ("b", b.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "T6" => {
                    let u = small_column(&mut s, len);
                    let a = s.ideal_scalar();
                    let zero = Scalar::zero(ring);
                    let two = Scalar::new(ring, 2);
                    let lhs = gen_word(VdKGen::new(
                        u.clone(),
                        u.vector().clone(),
                        a.clone(),
                        zero.clone(),
                        &fi,
                    )?);
                    let rhs = gen_word(VdKGen::new(
                        u.clone(),
                        HVector::zero(rank, ring),
                        zero,
                        two * &a,
                        &fi,
                    )?);
                    (
                        binding(&[("u", u.vector().to_string()), ("a", a.to_string())]),
                        lhs,
                        rhs,
                    )
                }
                "T7" => {
                    let (u, v) = shared_column_pair(&mut s, len.min(5));
                    let r = s.scalar();
                    let a = s.ideal_scalar();
                    let zero = Scalar::zero(ring);
                    let zero_vec = HVector::zero(rank, ring);
                    // u + vr keeps a witness: extend the shared word by one
                    // short-root letter.
                    let extended = ElemColumn::new(
                        u.word()
                            .mul(&AbsWord::generator(
                                rank,
                                AbsGen::new(v.base(), u.base(), r.clone())?,
                            ))
                            .reduced(),
                        u.base(),
                    );
                    debug_assert_eq!(*extended.vector(), u.vector().add(&v.vector().scale(&r)));
                    let lhs = gen_word(VdKGen::new(
                        extended,
                        zero_vec.clone(),
                        zero.clone(),
                        a.clone(),
                        &fi,
                    )?);
                    let rhs = gen_word(VdKGen::new(
                        u.clone(),
                        zero_vec.clone(),
                        zero.clone(),
                        a.clone(),
                        &fi,
                    )?)
                    .mul(&gen_word(VdKGen::new(
                        v.clone(),
                        zero_vec,
                        zero,
                        &a * &r * &r,
                        &fi,
                    )?))
                    .mul(&gen_word(VdKGen::new(
                        v.clone(),
                        u.vector().clone(),
                        &a * &r,
                        Scalar::zero(ring),
                        &fi,
                    )?));
                    (
                        binding(&[
                            ("u", u.vector().to_string()),
                            ("v", v.vector().to_string()),
                            ("r", r.to_string()),
                            ("a", a.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                _ => unreachable!(),
            };
            let pass = lhs.eval() == rhs.eval();
            report.push("t", family, case, bind, pass, None);
        }
    }
    Ok(report)
}

/// Two columns of one elementary matrix, with distinct non-opposite bases,
/// hence automatically orthogonal.
fn shared_column_pair(s: &mut Sampler<'_>, len: usize) -> (ElemColumn, ElemColumn) {
    let shared = small_column(s, len);
    let g = shared.word().clone();
    let i0 = shared.base();
    let j0 = loop {
        let j = s.index();
        if j != i0 && j != i0.opposite() {
            break j;
        }
    };
    (shared, ElemColumn::new(g, j0))
}

/// Replays KL0–KL7 with the relative generators replaced by the embedded
/// `_ij` quadruples and the formal action replaced by `vdk_act`.
pub fn verify_kl_for_vdk(cfg: &VerifyConfig) -> Result<Report> {
    require_maximal(&cfg.form)?;
    let mut report = Report::new();
    let mut rng = seeded_rng(cfg.seed);
    let rank = cfg.rank;
    let ring = cfg.ring;
    let two = Scalar::new(ring, 2);

    let act_letter = |i: Idx, j: Idx, r: Scalar, w: &VdKWord| -> Result<VdKWord> {
        vdk_act(&transvection_params(rank, i, j, r)?, w)
    };
    let boxed_left = |i: Idx, j: Idx, r: Scalar, m: &VdKWord| -> Result<VdKWord> {
        Ok(act_letter(i, j, r, m)?.mul(&m.inv()))
    };
    let boxed_right = |m: &VdKWord, i: Idx, j: Idx, r: Scalar| -> Result<VdKWord> {
        Ok(m.mul(&act_letter(i, j, r, &m.inv())?))
    };

    for family in crate::relative::KL_FAMILIES {
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
            let fi = cfg.form.clone();
            let mk = |i: Idx, j: Idx, c: Scalar| -> Result<VdKWord> {
                Ok(gen_word(vdk_gen_ij(rank, ring, i, j, c, &fi)?))
            };
            let (bind, lhs, rhs) = match family {
                "KL0" => {
                    let (i, j) = (t[0], t[1]);
                    let a = s.ideal_scalar();
                    let lhs = mk(i, j, a.clone())?;
                    let rhs = mk(j.opposite(), i.opposite(), -&a * i.eps(ring) * j.eps(ring))?;
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
                    let (a, b) = (s.ideal_scalar(), s.ideal_scalar());
                    let lhs = mk(i, j, a.clone())?.mul(&mk(i, j, b.clone())?);
                    let rhs = mk(i, j, &a + &b)?;
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
                    let a = s.ideal_scalar();
                    let y = mk(h, k, a.clone())?;
                    let lhs = boxed_left(i, j, r.clone(), &y)?;
                    let rhs = VdKWord::identity(rank, ring);
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
                    let b = s.ideal_scalar();
                    let y = mk(j, k, b.clone())?;
                    let lhs = boxed_left(i, j, r.clone(), &y)?;
                    let rhs = mk(i, k, &r * &b)?;
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("k", k.to_string()),
                            ("r", r.to_string()),
                            ("b", b.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL4" => {
                    let (i, j) = (t[0], t[1]);
                    let r = s.scalar();
                    let b = s.ideal_scalar();
                    let y = mk(i.opposite(), j, b.clone())?;
                    let lhs = boxed_left(i, i.opposite(), r.clone(), &y)?;
                    let rhs =
                        mk(i, j, &r * &b * i.eps(ring))?.mul(&mk(j.opposite(), j, -&r * &b * &b)?);
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("r", r.to_string()),
                            ("b", b.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL5" => {
                    let (i, j) = (t[0], t[1]);
                    let a = s.ideal_scalar();
                    let r = s.scalar();
                    let y = mk(i, i.opposite(), a.clone())?;
                    let lhs = boxed_right(&y, i.opposite(), j, r.clone())?;
                    let rhs =
                        mk(i, j, &a * &r * i.eps(ring))?.mul(&mk(j.opposite(), j, -&a * &r * &r)?);
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("a", a.to_string()),
                            ("r", r.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL6" => {
                    let (i, j) = (t[0], t[1]);
                    let r = s.scalar();
                    let b = s.ideal_scalar();
                    let y = mk(j, i.opposite(), b.clone())?;
                    let lhs = boxed_left(i, j, r.clone(), &y)?;
                    let rhs = mk(i, i.opposite(), &two * &r * &b * i.eps(ring))?;
                    (
                        binding(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("r", r.to_string()),
                            ("b", b.to_string()),
                        ]),
                        lhs,
                        rhs,
                    )
                }
                "KL7" => {
                    let (i, j, h, k) = (t[0], t[1], t[2], t[3]);
                    let a = s.ideal_scalar();
                    let b = s.ideal_scalar();
                    let target = mk(h, k, b.clone())?;
                    let lhs = act_letter(i, j, a.clone(), &target)?;
                    let y = mk(i, j, a.clone())?;
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
            report.push("kl-vdk", family, case, bind, pass, None);
        }
    }
    Ok(report)
}

/// Both round trips between the presentations: `ϖϱ` fixes images of
/// relative generators, `ϱϖ` fixes images of van der Kallen generators.
pub fn verify_roundtrips(cfg: &VerifyConfig) -> Result<Report> {
    require_maximal(&cfg.form)?;
    let mut report = Report::new();
    let mut rng = seeded_rng(cfg.seed);
    let rank = cfg.rank;
    let ring = cfg.ring;

    for case in 0..cfg.trials {
        let mut s = Sampler::new(cfg, &mut rng);
        let i = s.index();
        let j = loop {
            let j = s.index();
            if j != i {
                break j;
            }
        };
        let a = s.ideal_scalar();
        let g = crate::steinberg::random_elementary_column(s.rng, ring, rank, 2, 2)
            .word()
            .clone();
        let atom = RelWord::generator(rank, RelGen::new(i, j, a.clone(), &cfg.form)?).act(&g);
        let through = pi_map(&rho_map(&atom, &cfg.form)?, &cfg.form)?;
        let pass = through.eval() == atom.eval();
        report.push(
            "roundtrip",
            "pi-rho",
            case,
            binding(&[
                ("i", i.to_string()),
                ("j", j.to_string()),
                ("a", a.to_string()),
                ("g", g.to_string()),
            ]),
            pass,
            None,
        );
    }
    for case in 0..cfg.trials {
        let mut s = Sampler::new(cfg, &mut rng);
        let u = small_column(&mut s, 2);
        let v = column_orthogonal(&mut s, &u);
        let (a, b) = (s.ideal_scalar(), s.ideal_scalar());
        let gen = VdKGen::new(u, v, a, b, &cfg.form)?;
        let word = gen_word(gen.clone());
        let through = rho_map(&pi_map(&word, &cfg.form)?, &cfg.form)?;
        let pass = through.eval() == word.eval();
        report.push("roundtrip", "rho-pi", case, format!("g={gen}"), pass, None);
    }
    Ok(report)
}
