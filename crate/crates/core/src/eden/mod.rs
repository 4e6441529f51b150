//! Eden's encoding of site animals as binary sequences, turn counts and the
//! binomial-sum bound on animals with few turns.

mod codec;
mod ijq;

pub use codec::{
    check_turn_bound, code_length, eden_decode, eden_encode, max_turns_observed, EdenCode,
    EdenTree, TurnCheck,
};
pub use ijq::{ijq_upper_bound, BinomialTable};
