//! Exact-arithmetic machinery for symplectic Steinberg groups over
//! commutative rings.
//!
//! The crate builds the symplectic group `Sp_2l(R)` as exact matrices over
//! `ℤ` or `ℤ/m`, the absolute and relative symplectic Steinberg groups as
//! formal words, the generator calculus for Eichler–Siegel–Dickson
//! transvections, and the van der Kallen presentation by quadruples
//! `(u, v, a, b)`. Every stated relation family — the Steinberg relations
//! S0–S5, the relative relations KL0–KL7, the van der Kallen relations
//! T1–T7, and a catalog of generator identities — is verified by evaluating
//! both sides to matrices, exactly, with no tolerances.
//!
//! See the guide under `book/` for a narrative tour; the `stsp` binary in
//! the companion CLI crate drives the verification suites from the command
//! line.

pub mod error;
pub mod generators;
pub mod int;
pub mod parse;
pub mod relative;
pub mod report;
pub mod ring;
pub mod sample;
pub mod space;
pub mod steinberg;
pub mod transvection;
pub mod vdk;

pub use error::{Error, Result};
pub use relative::{
    boxed_left, boxed_right, levi_member, parabolic_member, recognize_unipotent_matrix,
    unipotent_normal_form, verify_kl_relations, RelAtom, RelGen, RelWord, UnipotentCoeffs,
};
pub use report::{Report, ReportRow};
pub use ring::{validate_form_ideal, FormIdeal, GammaMode, RingSpec, Scalar};
pub use sample::VerifyConfig;
pub use space::{form, gamma_defect, half_pairing, split_pm, HVector, Idx};
pub use steinberg::{
    abs_esd_word, abs_x_word, random_elementary_column, verify_steinberg_exhaustive,
    verify_steinberg_relations, AbsGen, AbsWord, ElemColumn, Sign,
};
pub use transvection::{
    apply_esd, elementary_transvection, esd_matrix, gram_check, EsdParams, MatrixRecord, SpMatrix,
};

#[cfg(test)]
mod shareable {
    // Values are immutable after construction; verification trials may run
    // concurrently without synchronization.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::Scalar>();
        assert_send_sync::<crate::FormIdeal>();
        assert_send_sync::<crate::HVector>();
        assert_send_sync::<crate::SpMatrix>();
        assert_send_sync::<crate::AbsWord>();
        assert_send_sync::<crate::RelWord>();
        assert_send_sync::<crate::ElemColumn>();
        assert_send_sync::<crate::vdk::VdKWord>();
        assert_send_sync::<crate::Report>();
    }
}
