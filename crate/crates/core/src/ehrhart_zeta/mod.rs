//! Ehrhart polynomials of `Q_σ`, zeta polynomials of `P_σ`, and
//! h*-polynomials, each computed along at least two independent routes.
//!
//! The identities tying them together:
//!
//! * `Ehr(Q_σ, m) = Z(P_rev(σ), m + 1)`;
//! * `h*(Q_σ, t) = Σ_w t^asc(w)` over admissible words;
//! * `h*(Q_σ, t)` equals the descent generating function of the maximal
//!   chains of `P_rev(σ) ∪ {1̂}` under the coordinate labeling.

mod bprofile;
mod chains;
mod ehrhart;
mod hstar;
mod zeta;

pub use bprofile::{bprofile_to_dilate, dilate_to_bprofile, enumerate_bprofiles, BProfile};
pub use chains::{el_chain_h, maximal_chain_labels};
pub use ehrhart::{
    ehrhart_count_oracle, ehrhart_polynomial, ehrhart_sp, ehrhart_values, enumerate_k, KTuple,
};
pub use hstar::{hstar_from_series, hstar_words, word_is_admissible, Word};
pub use zeta::{zeta_brute, zeta_polynomial, zeta_value};
