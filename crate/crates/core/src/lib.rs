//! Exact computation of Sibirsky ideals: the ideals whose varieties are the
//! Zariski closures of the time-reversible systems inside a polynomial family
//!
//! ```text
//! dx/dt = -Σ a_pq x^(p+1) y^q,   dy/dt = Σ b_qp x^q y^(p+1),   (p, q) ∈ S
//! ```
//!
//! together with Hilbert bases of the associated invariant monoids and an
//! exact reversibility test for concrete coefficient vectors.
//!
//! The crate is layered bottom-up: [`scalars`] (ℚ and ℚ(i)), [`poly`]
//! (sparse polynomials), [`groebner`] (Buchberger engine and elimination)
//! and [`reversibility`] (everything specific to reversible families).

pub mod groebner;
pub mod poly;
pub mod reversibility;
pub mod scalars;
