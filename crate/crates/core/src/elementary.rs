//! Elementary homomorphisms (in progress).
