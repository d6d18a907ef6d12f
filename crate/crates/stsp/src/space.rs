//! The free module `V = R^{2l}` with hyperbolic basis indexing and the
//! standard symplectic form.
//!
//! Basis vectors are numbered `e_{-l}, …, e_{-1}, e_1, …, e_l` (index 0
//! never occurs) and stored in exactly that order; every module in the
//! crate shares this one index-to-slot bijection. The form is
//! `⟨e_i, e_j⟩ = sgn(i)·δ_{i,-j}`, so `⟨u, v⟩ = Σ_{i>0} (u_i v_{-i} - u_{-i} v_i)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{FormIdeal, RingSpec, Scalar};

/// Smallest hyperbolic rank accepted anywhere in the crate.
pub const MIN_RANK: usize = 3;

/// A hyperbolic index: a nonzero integer in `{-l, …, -1, 1, …, l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Idx(i32);

impl Idx {
    pub fn new(raw: i32, rank: usize) -> Result<Idx> {
        if raw == 0 || raw.unsigned_abs() as usize > rank {
            return Err(Error::BadIndex {
                index: raw as i64,
                rank,
            });
        }
        Ok(Idx(raw))
    }

    pub fn get(self) -> i32 {
        self.0
    }

    pub fn opposite(self) -> Idx {
        Idx(-self.0)
    }

    /// `sgn(i)` as a plain integer.
    pub fn sign(self) -> i32 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    /// `ε_i = sgn(i)` embedded into the ring.
    pub fn eps(self, ring: RingSpec) -> Scalar {
        Scalar::new(ring, self.sign() as i128)
    }

    /// Storage slot under the fixed ordering `-l, …, -1, 1, …, l`.
    pub fn slot(self, rank: usize) -> usize {
        let l = rank as i32;
        if self.0 < 0 {
            (self.0 + l) as usize
        } else {
            (l + self.0 - 1) as usize
        }
    }

    pub fn from_slot(slot: usize, rank: usize) -> Idx {
        let l = rank as i32;
        let s = slot as i32;
        if s < l {
            Idx(s - l)
        } else {
            Idx(s - l + 1)
        }
    }

    /// All indices in storage order.
    pub fn all(rank: usize) -> impl Iterator<Item = Idx> {
        (0..2 * rank).map(move |s| Idx::from_slot(s, rank))
    }
}

impl fmt::Display for Idx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of `V = R^{2l}`, stored densely in the fixed basis order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HVector {
    rank: usize,
    ring: RingSpec,
    coords: Vec<Scalar>,
}

impl HVector {
    pub fn zero(rank: usize, ring: RingSpec) -> HVector {
        assert!(rank >= MIN_RANK, "rank below {MIN_RANK}");
        HVector {
            rank,
            ring,
            coords: vec![Scalar::zero(ring); 2 * rank],
        }
    }

    pub fn basis(rank: usize, ring: RingSpec, idx: Idx) -> HVector {
        let mut v = HVector::zero(rank, ring);
        v.coords[idx.slot(rank)] = Scalar::one(ring);
        v
    }

    /// Builds a vector from coordinates in storage order
    /// `c_{-l}, …, c_{-1}, c_1, …, c_l`.
    pub fn from_coords(rank: usize, ring: RingSpec, coords: Vec<Scalar>) -> Result<HVector> {
        if coords.len() != 2 * rank {
            return Err(Error::Hypothesis(format!(
                "expected {} coordinates, got {}",
                2 * rank,
                coords.len()
            )));
        }
        if rank < MIN_RANK {
            return Err(Error::RankTooSmall(rank));
        }
        for c in &coords {
            if c.ring() != ring {
                return Err(Error::RingMismatch(ring, c.ring()));
            }
        }
        Ok(HVector { rank, ring, coords })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn coord(&self, idx: Idx) -> Scalar {
        self.coords[idx.slot(self.rank)].clone()
    }

    pub fn set_coord(&mut self, idx: Idx, value: Scalar) {
        assert_eq!(value.ring(), self.ring, "ring mismatch");
        self.coords[idx.slot(self.rank)] = value;
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &HVector) -> HVector {
        self.check_compat(other).expect("vector shape mismatch");
        HVector {
            rank: self.rank,
            ring: self.ring,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &HVector) -> HVector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HVector {
        HVector {
            rank: self.rank,
            ring: self.ring,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    /// Right scaling `v·a`.
    pub fn scale(&self, a: &Scalar) -> HVector {
        HVector {
            rank: self.rank,
            ring: self.ring,
            coords: self.coords.iter().map(|c| c * a).collect(),
        }
    }

    /// Zeroes out the `±i` coordinates: `v - e_i v_i - e_{-i} v_{-i}`.
    pub fn without_pair(&self, i: Idx) -> HVector {
        let mut v = self.clone();
        v.set_coord(i, Scalar::zero(self.ring));
        v.set_coord(i.opposite(), Scalar::zero(self.ring));
        v
    }

    /// The `e_i v_i + e_{-i} v_{-i}` part.
    pub fn pair_part(&self, i: Idx) -> HVector {
        let mut v = HVector::zero(self.rank, self.ring);
        v.set_coord(i, self.coord(i));
        v.set_coord(i.opposite(), self.coord(i.opposite()));
        v
    }

    pub fn check_compat(&self, other: &HVector) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        Ok(())
    }

    /// True when every coordinate lies in the ideal of `form`.
    pub fn in_ideal(&self, form: &FormIdeal) -> Result<bool> {
        for c in &self.coords {
            if !form.ideal_member(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The standard symplectic form `⟨u, v⟩ = Σ_{i>0} (u_i v_{-i} - u_{-i} v_i)`.
pub fn form(u: &HVector, v: &HVector) -> Result<Scalar> {
    u.check_compat(v)?;
    let ring = u.ring();
    let mut acc = Scalar::zero(ring);
    for i in 1..=u.rank() as i32 {
        let pos = Idx::new(i, u.rank()).unwrap();
        let neg = pos.opposite();
        acc = acc + u.coord(pos) * v.coord(neg) - u.coord(neg) * v.coord(pos);
    }
    Ok(acc)
}

/// Splits `v = v_- + v_+` into its negative- and positive-index parts.
pub fn split_pm(v: &HVector) -> (HVector, HVector) {
    let mut minus = HVector::zero(v.rank(), v.ring());
    let mut plus = HVector::zero(v.rank(), v.ring());
    for i in Idx::all(v.rank()) {
        if i.get() < 0 {
            minus.set_coord(i, v.coord(i));
        } else {
            plus.set_coord(i, v.coord(i));
        }
    }
    (minus, plus)
}

/// `⟨v_-, v_+⟩`, the correction term that pairs the two halves of `v`.
pub fn half_pairing(v: &HVector) -> Scalar {
    let (minus, plus) = split_pm(v);
    form(&minus, &plus).unwrap()
}

/// The Γ-defect of a symplectic matrix on an ideal vector:
/// `⟨(Mv)_-, (Mv)_+⟩ - ⟨v_-, v_+⟩`, together with its Γ-membership.
///
/// Products of elementary transvections always leave the defect inside Γ.
pub fn gamma_defect(
    m: &crate::transvection::SpMatrix,
    v: &HVector,
    form_ideal: &FormIdeal,
) -> Result<(Scalar, bool)> {
    if !crate::transvection::gram_check(m) {
        return Err(Error::hypothesis("matrix is not symplectic"));
    }
    if !v.in_ideal(form_ideal)? {
        return Err(Error::NotInIdeal(format!("vector {v}")));
    }
    let moved = m.apply(v)?;
    let defect = half_pairing(&moved) - half_pairing(v);
    let member = form_ideal.gamma_member(&defect)?;
    Ok((defect, member))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn idx(i: i32) -> Idx {
        Idx::new(i, 3).unwrap()
    }

    fn sc(v: i128) -> Scalar {
        Scalar::new(z(), v)
    }

    #[test]
    fn slots_follow_basis_enumeration() {
        // e_{-3}, e_{-2}, e_{-1}, e_1, e_2, e_3
        let order: Vec<i32> = Idx::all(3).map(|i| i.get()).collect();
        assert_eq!(order, vec![-3, -2, -1, 1, 2, 3]);
        for i in Idx::all(3) {
            assert_eq!(Idx::from_slot(i.slot(3), 3), i);
        }
    }

    #[test]
    fn index_zero_never_occurs() {
        assert!(Idx::new(0, 3).is_err());
        assert!(Idx::new(4, 3).is_err());
        assert!(Idx::new(-4, 3).is_err());
        assert!(Idx::new(4, 4).is_ok());
    }

    #[test]
    fn form_on_basis_pairs_matches_the_sign_rule() {
        // ⟨e_i, e_j⟩ = sgn(i)·δ_{i,-j}, brute force over all basis pairs.
        for l in [3usize, 4] {
            for i in Idx::all(l) {
                for j in Idx::all(l) {
                    let ei = HVector::basis(l, z(), i);
                    let ej = HVector::basis(l, z(), j);
                    let expect = if i.opposite() == j {
                        i.sign() as i128
                    } else {
                        0
                    };
                    assert_eq!(form(&ei, &ej).unwrap(), Scalar::new(z(), expect));
                }
            }
        }
    }

    #[test]
    fn form_example() {
        // l = 3, u = e_2·3 + e_{-3}, v = e_{-2}·5: ⟨u, v⟩ = 15.
        let mut u = HVector::zero(3, z());
        u.set_coord(idx(2), sc(3));
        u.set_coord(idx(-3), sc(1));
        let mut v = HVector::zero(3, z());
        v.set_coord(idx(-2), sc(5));
        assert_eq!(form(&u, &v).unwrap(), sc(15));
    }

    #[test]
    fn split_reconstructs_and_pairs() {
        let mut v = HVector::zero(3, z());
        v.set_coord(idx(-2), sc(7));
        v.set_coord(idx(3), sc(-2));
        let (m, p) = split_pm(&v);
        assert_eq!(m.add(&p), v);
        assert!(m.coords()[3..].iter().all(|c| c.is_zero()));
        assert!(p.coords()[..3].iter().all(|c| c.is_zero()));

        // v = e_{-1} + e_1: ⟨v_-, v_+⟩ = ⟨e_{-1}, e_1⟩ = -1.
        let mut w = HVector::zero(3, z());
        w.set_coord(idx(-1), sc(1));
        w.set_coord(idx(1), sc(1));
        assert_eq!(half_pairing(&w), sc(-1));
    }

    #[test]
    fn split_of_zero() {
        let v = HVector::zero(3, z());
        let (m, p) = split_pm(&v);
        assert!(m.is_zero() && p.is_zero());
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let u = HVector::zero(3, z());
        let v = HVector::zero(4, z());
        assert!(form(&u, &v).is_err());
    }
}
