//! Computational tools for totally real number fields: exact polynomial
//! arithmetic, maximal orders and certified embeddings, sums-of-squares
//! decision procedures, bounded hunts for low-house generators, and real
//! cyclotomic (cosine ring) identities.

pub mod cyclo;
pub mod exact;
pub mod hunt;
pub mod numfield;
pub mod sos;
