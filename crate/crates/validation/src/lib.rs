//! Holds the `acceptance` test target; there is no library code.
//!
//! `cargo test -p swchan-validation --test acceptance` prints one
//! `criterion N: PASS|FAIL` line per acceptance criterion.
