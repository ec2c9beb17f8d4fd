#![no_main]

use libfuzzer_sys::fuzz_target;
use qisg_cli::structure::parse_structure;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        // errors are fine, panics are not
        let _ = parse_structure(text);
    }
});
