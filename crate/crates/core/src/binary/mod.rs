//! Binary codes: Levenshtein, shifted VT, 2-burst and run-length-limited.

pub mod burst2;
pub mod lev;
pub mod rll;
pub mod svt;

pub use burst2::{dec_burst, member_lburst};
pub use lev::{dec_l_codeword, dec_l_message, enc_l, member_l, project, LevParams};
pub use rll::{dec_rll, enc_rll, rll_run_limit};
pub use svt::{dec_svt, dec_svt_message, enc_svt, member_svt, SvtParams};
