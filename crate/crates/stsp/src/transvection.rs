//! Eichler–Siegel–Dickson transformations, elementary symplectic
//! transvections, and exact `2l × 2l` matrices over the active ring.
//!
//! The ESD transformation attached to orthogonal vectors `u, v` and a ring
//! element `a` acts by
//!
//! ```text
//! w ↦ w + u(⟨v, w⟩ + a⟨u, w⟩) + v⟨u, w⟩
//! ```
//!
//! and is always symplectic. The elementary transvections are the
//! specializations `T_ij(a) = T(e_i, e_{-j}·a·ε_{-j}, 0)` for `j ≠ -i` and
//! `T_{i,-i}(a) = T(e_i, 0, a)`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::{RingSpec, Scalar};
use crate::space::{form, HVector, Idx};

/// A dense `2l × 2l` matrix with exact entries; column `j` holds the image
/// of basis vector `j` under the fixed index-to-slot mapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpMatrix {
    rank: usize,
    ring: RingSpec,
    /// Row-major entries, kept canonical for the ring.
    entries: Vec<Int>,
}

impl SpMatrix {
    pub fn identity(rank: usize, ring: RingSpec) -> SpMatrix {
        let n = 2 * rank;
        let mut entries = vec![Int::zero(); n * n];
        for r in 0..n {
            entries[r * n + r] = Scalar::one(ring).value().clone();
        }
        SpMatrix {
            rank,
            ring,
            entries,
        }
    }

    /// Builds a matrix from columns given as vectors.
    pub fn from_columns(rank: usize, ring: RingSpec, cols: &[HVector]) -> SpMatrix {
        let n = 2 * rank;
        assert_eq!(cols.len(), n);
        let mut entries = vec![Int::zero(); n * n];
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.rank(), rank);
            assert_eq!(col.ring(), ring);
            for r in 0..n {
                entries[r * n + c] = col.coords()[r].value().clone();
            }
        }
        SpMatrix {
            rank,
            ring,
            entries,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn entry(&self, row: Idx, col: Idx) -> Scalar {
        let n = 2 * self.rank;
        Scalar::from_int(
            self.ring,
            self.entries[row.slot(self.rank) * n + col.slot(self.rank)].clone(),
        )
    }

    pub fn column(&self, col: Idx) -> HVector {
        let n = 2 * self.rank;
        let c = col.slot(self.rank);
        let coords = (0..n)
            .map(|r| Scalar::from_int(self.ring, self.entries[r * n + c].clone()))
            .collect();
        HVector::from_coords(self.rank, self.ring, coords).unwrap()
    }

    pub fn is_identity(&self) -> bool {
        *self == SpMatrix::identity(self.rank, self.ring)
    }

    /// Exact matrix product, entries reduced per ring.
    pub fn mul(&self, rhs: &SpMatrix) -> SpMatrix {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let n = 2 * self.rank;
        let mut out = Vec::with_capacity(n * n);
        for r in 0..n {
            let row = &self.entries[r * n..(r + 1) * n];
            for c in 0..n {
                let mut acc = Int::zero();
                for (k, a) in row.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    acc.add_assign_ref(&a.mul_ref(&rhs.entries[k * n + c]));
                }
                out.push(match self.ring {
                    RingSpec::Integers => acc,
                    RingSpec::Mod(m) => Int::from(acc.rem_euclid_u64(m)),
                });
            }
        }
        SpMatrix {
            rank: self.rank,
            ring: self.ring,
            entries: out,
        }
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &HVector) -> Result<HVector> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch(self.rank, v.rank()));
        }
        if v.ring() != self.ring {
            return Err(Error::RingMismatch(self.ring, v.ring()));
        }
        let n = 2 * self.rank;
        let mut coords = Vec::with_capacity(n);
        for r in 0..n {
            let mut acc = Int::zero();
            for k in 0..n {
                let a = &self.entries[r * n + k];
                if a.is_zero() {
                    continue;
                }
                acc.add_assign_ref(&a.mul_ref(v.coords()[k].value()));
            }
            coords.push(Scalar::from_int(self.ring, acc));
        }
        HVector::from_coords(self.rank, self.ring, coords)
    }

    pub fn transpose(&self) -> SpMatrix {
        let n = 2 * self.rank;
        let mut out = vec![Int::zero(); n * n];
        for r in 0..n {
            for c in 0..n {
                out[c * n + r] = self.entries[r * n + c].clone();
            }
        }
        SpMatrix {
            rank: self.rank,
            ring: self.ring,
            entries: out,
        }
    }

    /// The Gram matrix `J` of the standard form: `J[i][j] = ⟨e_i, e_j⟩`.
    pub fn gram(rank: usize, ring: RingSpec) -> SpMatrix {
        let cols: Vec<HVector> = Idx::all(rank)
            .map(|j| {
                let mut col = HVector::zero(rank, ring);
                for i in Idx::all(rank) {
                    let v = if i.opposite() == j {
                        i.sign() as i128
                    } else {
                        0
                    };
                    col.set_coord(i, Scalar::new(ring, v));
                }
                col
            })
            .collect();
        SpMatrix::from_columns(rank, ring, &cols)
    }

    /// Row-major serialization: canonical scalar strings plus rank and ring
    /// tag. Stable across runs.
    pub fn to_record(&self) -> MatrixRecord {
        MatrixRecord {
            ring: self.ring.to_string(),
            l: self.rank,
            entries: self.entries.iter().map(|e| e.to_string()).collect(),
        }
    }

    pub fn from_record(rec: &MatrixRecord) -> Result<SpMatrix> {
        let ring = RingSpec::parse(&rec.ring)?;
        let n = 2 * rec.l;
        if rec.entries.len() != n * n {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected {} entries, got {}", n * n, rec.entries.len()),
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for e in &rec.entries {
            let v: Int = e.parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad matrix entry {e:?}"),
            })?;
            entries.push(Scalar::from_int(ring, v).value().clone());
        }
        Ok(SpMatrix {
            rank: rec.l,
            ring,
            entries,
        })
    }
}

impl fmt::Display for SpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = 2 * self.rank;
        for r in 0..n {
            write!(f, "[")?;
            for c in 0..n {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[r * n + c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Row-major matrix serialization, stable for golden tests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub ring: String,
    pub l: usize,
    pub entries: Vec<String>,
}

/// The parameter triple `(u, v, a)` of an ESD transformation; requires
/// `⟨u, v⟩ = 0`, which every downstream formula silently relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsdParams {
    u: HVector,
    v: HVector,
    a: Scalar,
}

impl EsdParams {
    pub fn new(u: HVector, v: HVector, a: Scalar) -> Result<EsdParams> {
        u.check_compat(&v)?;
        if a.ring() != u.ring() {
            return Err(Error::RingMismatch(u.ring(), a.ring()));
        }
        if !form(&u, &v)?.is_zero() {
            return Err(Error::hypothesis("⟨u, v⟩ ≠ 0"));
        }
        Ok(EsdParams { u, v, a })
    }

    pub fn u(&self) -> &HVector {
        &self.u
    }

    pub fn v(&self) -> &HVector {
        &self.v
    }

    pub fn a(&self) -> Scalar {
        self.a.clone()
    }

    /// `T(u, v, a)^{-1} = T(u, -v, -a)`.
    pub fn inverse(&self) -> EsdParams {
        EsdParams {
            u: self.u.clone(),
            v: self.v.neg(),
            a: -&self.a,
        }
    }
}

/// Applies `T(u, v, a)` to `w` by the defining formula.
pub fn apply_esd(p: &EsdParams, w: &HVector) -> Result<HVector> {
    p.u.check_compat(w)?;
    let vw = form(&p.v, w)?;
    let uw = form(&p.u, w)?;
    Ok(w.add(&p.u.scale(&(vw + &p.a * &uw))).add(&p.v.scale(&uw)))
}

/// The matrix of `T(u, v, a)`: column `i` is `T(u, v, a)·e_i`.
///
/// A Gram-check failure here is a hard internal error; it can only mean the
/// orthogonality precondition was bypassed.
pub fn esd_matrix(p: &EsdParams) -> SpMatrix {
    let rank = p.u.rank();
    let ring = p.u.ring();
    let cols: Vec<HVector> = Idx::all(rank)
        .map(|i| apply_esd(p, &HVector::basis(rank, ring, i)).unwrap())
        .collect();
    let m = SpMatrix::from_columns(rank, ring, &cols);
    assert!(gram_check(&m), "ESD matrix failed the Gram check");
    m
}

/// The elementary symplectic transvection `T_ij(a)`:
/// `T(e_i, e_{-j}·a·ε_{-j}, 0)` for the short roots and `T(e_i, 0, a)` for
/// the long roots `j = -i`.
pub fn elementary_transvection(rank: usize, i: Idx, j: Idx, a: Scalar) -> Result<SpMatrix> {
    Ok(esd_matrix(&transvection_params(rank, i, j, a)?))
}

/// The ESD parameters of `T_ij(a)`.
pub fn transvection_params(rank: usize, i: Idx, j: Idx, a: Scalar) -> Result<EsdParams> {
    if i == j {
        return Err(Error::EqualIndices(i.get() as i64));
    }
    let ring = a.ring();
    let u = HVector::basis(rank, ring, i);
    if j == i.opposite() {
        EsdParams::new(u, HVector::zero(rank, ring), a)
    } else {
        let mj = j.opposite();
        let v = HVector::basis(rank, ring, mj).scale(&(a * mj.eps(ring)));
        EsdParams::new(u, v, Scalar::zero(ring))
    }
}

/// Exact symplectic membership: `Mᵀ·J·M = J`.
pub fn gram_check(m: &SpMatrix) -> bool {
    let j = SpMatrix::gram(m.rank(), m.ring());
    m.transpose().mul(&j).mul(m) == j
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn idx(i: i32) -> Idx {
        Idx::new(i, 3).unwrap()
    }

    fn sc(v: i128) -> Scalar {
        Scalar::new(z(), v)
    }

    fn basis(i: i32) -> HVector {
        HVector::basis(3, z(), idx(i))
    }

    #[test]
    fn trivial_esd_is_the_identity() {
        // T(u, 0, 0) = 1.
        let p = EsdParams::new(basis(2), HVector::zero(3, z()), sc(0)).unwrap();
        assert!(esd_matrix(&p).is_identity());
        let w = basis(-1);
        assert_eq!(apply_esd(&p, &w).unwrap(), w);
    }

    #[test]
    fn long_root_moves_the_opposite_basis_vector() {
        // T(e_1, 0, a)·e_{-1} = e_{-1} + e_1·a.
        let p = EsdParams::new(basis(1), HVector::zero(3, z()), sc(5)).unwrap();
        let got = apply_esd(&p, &basis(-1)).unwrap();
        assert_eq!(got, basis(-1).add(&basis(1).scale(&sc(5))));
    }

    #[test]
    fn short_esd_example() {
        // T(e_1, e_2, 0)·e_{-2} = e_{-2} + e_1 since ⟨e_2, e_{-2}⟩ = 1.
        let p = EsdParams::new(basis(1), basis(2), sc(0)).unwrap();
        let got = apply_esd(&p, &basis(-2)).unwrap();
        assert_eq!(got, basis(-2).add(&basis(1)));
    }

    #[test]
    fn orthogonality_is_checked_eagerly() {
        assert!(EsdParams::new(basis(1), basis(-1), sc(0)).is_err());
    }

    #[test]
    fn inverse_law() {
        // T(u, -v, -a)·T(u, v, a) = 1.
        let u = basis(1).add(&basis(2).scale(&sc(3)));
        let v = basis(2).scale(&sc(2)).add(&basis(1).scale(&sc(-1)));
        let p = EsdParams::new(u, v, sc(4)).unwrap();
        assert!(esd_matrix(&p.inverse()).mul(&esd_matrix(&p)).is_identity());
    }

    #[test]
    fn composition_law() {
        // T(u,v,a)·T(u,w,b) = T(u, v+w, a+b+⟨v,w⟩).
        let u = basis(1);
        let v = basis(2).scale(&sc(2)).add(&basis(-2).scale(&sc(1)));
        let w = basis(2).scale(&sc(-3)).add(&basis(3).scale(&sc(2)));
        let (a, b) = (sc(5), sc(-2));
        let lhs = esd_matrix(&EsdParams::new(u.clone(), v.clone(), a.clone()).unwrap()).mul(
            &esd_matrix(&EsdParams::new(u.clone(), w.clone(), b.clone()).unwrap()),
        );
        let c = a + b + form(&v, &w).unwrap();
        let rhs = esd_matrix(&EsdParams::new(u, v.add(&w), c).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn elementary_transvections() {
        // T_{12}(a)·e_2 = e_2 + e_1·a.
        let t = elementary_transvection(3, idx(1), idx(2), sc(7)).unwrap();
        assert_eq!(
            t.apply(&basis(2)).unwrap(),
            basis(2).add(&basis(1).scale(&sc(7)))
        );
        // T_{1,-1}(a)·e_{-1} = e_{-1} + e_1·a.
        let t = elementary_transvection(3, idx(1), idx(-1), sc(7)).unwrap();
        assert_eq!(
            t.apply(&basis(-1)).unwrap(),
            basis(-1).add(&basis(1).scale(&sc(7)))
        );
        // T_{12}(0) = 1.
        let t = elementary_transvection(3, idx(1), idx(2), sc(0)).unwrap();
        assert!(t.is_identity());
        // i = j is rejected.
        assert!(elementary_transvection(3, idx(2), idx(2), sc(1)).is_err());
    }

    #[test]
    fn gram_check_accepts_transvections_and_rejects_swaps() {
        assert!(gram_check(&SpMatrix::identity(3, z())));
        for (i, j, a) in [(1, 2, 3), (2, -1, -2), (-3, 3, 5), (1, -1, 1)] {
            let t = elementary_transvection(3, idx(i), idx(j), sc(a)).unwrap();
            assert!(gram_check(&t));
        }
        // Swapping e_1 ↔ e_2 while fixing everything else breaks the form:
        // ⟨e_1, e_{-1}⟩ = 1 would need ⟨e_2, e_{-1}⟩ = 1.
        let mut cols: Vec<HVector> = Idx::all(3).map(|i| HVector::basis(3, z(), i)).collect();
        cols.swap(idx(1).slot(3), idx(2).slot(3));
        let swap = SpMatrix::from_columns(3, z(), &cols);
        assert!(!gram_check(&swap));
    }

    #[test]
    fn fixed_points_of_esd() {
        // T(u, v, a)·w = w whenever ⟨u, w⟩ = ⟨v, w⟩ = 0.
        let u = basis(1);
        let v = basis(2).scale(&sc(4));
        let p = EsdParams::new(u, v, sc(9)).unwrap();
        for w in [basis(1), basis(2), basis(3), basis(-3)] {
            assert_eq!(apply_esd(&p, &w).unwrap(), w);
        }
    }

    #[test]
    fn matrix_serialization_is_frozen() {
        // Golden record: stable across runs and platforms.
        let ring = RingSpec::modulo(5).unwrap();
        let t = elementary_transvection(3, idx(1), idx(2), Scalar::new(ring, 3)).unwrap();
        let json = serde_json::to_string(&t.to_record()).unwrap();
        assert_eq!(
            json,
            "{\"ring\":\"zmod:5\",\"l\":3,\"entries\":[\"1\",\"0\",\"0\",\"0\",\"0\",\"0\",\
\"0\",\"1\",\"2\",\"0\",\"0\",\"0\",\"0\",\"0\",\"1\",\"0\",\"0\",\"0\",\"0\",\"0\",\
\"0\",\"1\",\"3\",\"0\",\"0\",\"0\",\"0\",\"0\",\"1\",\"0\",\"0\",\"0\",\"0\",\"0\",\
\"0\",\"1\"]}"
        );
    }

    #[test]
    fn matrix_record_round_trip() {
        let t = elementary_transvection(3, idx(1), idx(2), sc(-4)).unwrap();
        let rec = t.to_record();
        let back = SpMatrix::from_record(&rec).unwrap();
        assert_eq!(t, back);
        let json = serde_json::to_string(&rec).unwrap();
        let rec2: MatrixRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(rec, rec2);
    }

    #[test]
    fn gamma_defect_formulas() {
        use crate::ring::{FormIdeal, GammaMode};
        use crate::space::gamma_defect;
        // For M = T_{i,-i}(r) the defect on v is -ε_i·r·v_{-i}²,
        // and for M = T_{ij}(r) it is v_{-i}·v_j·r·(ε_iε_j - 1).
        let ring = z();
        let f = FormIdeal::new(ring, vec![Scalar::new(ring, 2)], GammaMode::Minimal).unwrap();
        let mut v = HVector::zero(3, ring);
        v.set_coord(idx(1), sc(2));
        v.set_coord(idx(-1), sc(4));
        v.set_coord(idx(2), sc(-2));
        v.set_coord(idx(-3), sc(6));

        let ident = SpMatrix::identity(3, ring);
        assert_eq!(gamma_defect(&ident, &v, &f).unwrap(), (sc(0), true));

        for i in [1, -2] {
            let r = sc(3);
            let m = elementary_transvection(3, idx(i), idx(-i), r.clone()).unwrap();
            let (defect, ok) = gamma_defect(&m, &v, &f).unwrap();
            let vmi = v.coord(idx(-i));
            assert_eq!(defect, -idx(i).eps(ring) * r * &vmi * &vmi);
            assert!(ok);
        }
        for (i, j) in [(1, 2), (-1, 3), (2, -3)] {
            let r = sc(5);
            let m = elementary_transvection(3, idx(i), idx(j), r.clone()).unwrap();
            let (defect, ok) = gamma_defect(&m, &v, &f).unwrap();
            let eps = idx(i).eps(ring) * idx(j).eps(ring) - Scalar::one(ring);
            assert_eq!(defect, v.coord(idx(-i)) * v.coord(idx(j)) * r * eps);
            assert!(ok);
        }
    }
}
