#![no_main]

use libfuzzer_sys::fuzz_target;
use qisg_cli::structure::canonicalize;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(once) = canonicalize(text) {
        let twice = canonicalize(&once).expect("canonical output reparses");
        assert_eq!(once, twice);
    }
});
