//! Computational algebra for the extended bicyclic semigroup `B_ℤ^F` over an
//! ω-closed family `F` of inductive tails, with the two-element family
//! `{[0), [1)}` as the main case.
//!
//! * [`kernel`]: elements, tails, the product, inverses, order, corners.
//! * [`morphisms`]: the injective endomorphisms `α_{k,p}`, `β_{k,p}` and the
//!   automorphism group generated by the tail-swapping shift.
//! * [`verify`]: brute-force checks over finite windows with least
//!   counterexamples, classification into canonical form, and a seeded
//!   theorem suite.

pub mod cli;
pub mod kernel;
pub mod morphisms;
pub mod verify;

pub use kernel::{Element, Family, KernelError, Product, Tail, Window, F2};
pub use morphisms::{BaseKind, CanonicalEndo, EndoBase};
