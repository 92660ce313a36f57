//! Quaternary codes that correct a single edit.

pub mod cb;
pub mod edit_a;
pub mod edit_b;
pub mod rank;
pub mod rsb;
pub mod nt;
pub mod sum_balance;

pub use cb::{cb_decode, cb_decode_indel, cb_decode_substitution, deletion_candidates, insertion_candidates, member_cb, CbParams};
pub use edit_a::{dec_edit_a, enc_edit_a, EditAParams};
pub use edit_b::{default_window, EditBCodec, EncBParams};
pub use nt::{dec_nt_edit, enc_nt_edit, member_cnt, NtParams};
pub use rank::SumWindowRanker;
pub use rsb::RsbCodec;
pub use sum_balance::{first_violating_window, is_restricted_sum_balanced, is_sum_balanced, window_sum_in_range};
