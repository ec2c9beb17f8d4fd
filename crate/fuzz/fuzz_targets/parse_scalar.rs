#![no_main]

use libfuzzer_sys::fuzz_target;
use qisg_core::linear::{format_scalar, parse_scalar};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 256 {
        return;
    }
    if let Ok(q) = parse_scalar(text) {
        let shown = format_scalar(&q);
        assert_eq!(parse_scalar(&shown).ok(), Some(q));
    }
});
