//! DNA codes correcting one indel or one burst of `b` adjacent indels.

pub mod burst;
pub mod single;

pub use burst::{dec_burst_indel, enc_burst_indel, member_burst_indel, BurstParams};
pub use single::{dec_indel, enc_indel, member_c, IndelParams};
