//! Grothendieck polynomials of Grassmannian type and a Murnaghan–Nakayama
//! rule for their products with power sums.
//!
//! * [`shapes`]: partitions, skew diagrams, ribbons.
//! * [`poly`]: exact sparse polynomials in `x1..xn` and `β`.
//! * [`bialternant`]: `G_λ`, `G̃_λ` and the `e_k`, `h_k`, `p_k` generators.
//! * [`pieri`]: binary tableaux and the Pieri rules for `e_k` and `h_k`.
//! * [`mnrule`]: the expansion of `G_λ · p_k` in the `G` and `G̃` bases.
//! * [`verify`]: exact certification of every rule against the
//!   bi-alternant polynomials.
//!
//! ```
//! use grothendieck::{mn_expand, Basis, Partition};
//!
//! let exp = mn_expand(&Partition::empty(), 2, 2, Basis::G).unwrap();
//! assert_eq!(exp.to_text(), "G_() * p_2 = G_(2) - G_(1,1) - b*G_(2,1) + b^2*G_(2,2)");
//! ```

pub mod bialternant;
pub mod error;
pub mod expansion;
pub mod mnrule;
pub mod pieri;
pub mod poly;
pub mod shapes;
pub mod verify;

pub use bialternant::{complete, elementary, grothendieck, grothendieck_tilde, powersum};
pub use error::{Error, Result};
pub use expansion::{Basis, Expansion, Factor};
pub use mnrule::{mn_expand, StripGeometry};
pub use poly::{BetaCoeff, Monomial, Poly};
pub use shapes::{Partition, SkewShape};
