//! Classification tables (in progress).
