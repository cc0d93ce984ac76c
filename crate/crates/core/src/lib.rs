//! Exact q-series arithmetic for conjugacy growth series of finitary
//! permutation groups and their wreath products.
//!
//! The crate provides, in dependency order:
//!
//! * [`series`] — truncated Laurent q-expansions with rational exponents on a
//!   fixed grain, over exact integers or residues (`ring`),
//! * [`eta`] — Dedekind eta, eta-quotients and their grain-24 q-expansions,
//!   plus the classical modularity conditions for eta-quotients,
//! * [`operators`] — `U_t`, `V_t`, the integer- and half-integral-weight
//!   Hecke coefficient transforms, the Kronecker symbol, and arithmetic
//!   progression extraction,
//! * [`growth`] — the conjugacy growth series of `Sym`, `Alt`, and `H wr Alt`
//!   with their Laurent embeddings, together with combinatorial oracles
//!   ([`oracle`]) that verify them by brute force,
//! * [`cuspform`] — `U`-power tails, the coprime-index projection
//!   `f|U_{p^r} - f|U_{p^{r+1}}|V_p`, and cusp-form candidates built by
//!   multiplying with powers of the eta-quotients `F_p ≡ 1 (mod p)`,
//! * [`congruence`] — Sturm bounds, verification and scanning of coefficient
//!   congruences on arithmetic progressions, annihilation propagation
//!   bookkeeping, and the bundled `section6` mod-7 reproduction chain.

pub mod congruence;
pub mod cuspform;
pub mod error;
pub mod eta;
pub mod growth;
pub mod operators;
pub mod oracle;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use ring::CoefficientRing;
pub use series::QSeries;
