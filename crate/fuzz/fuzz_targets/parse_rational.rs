#![no_main]
use hlm_core::algebra::scalar::{format_rational, parse_rational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(r) = parse_rational(data) {
        assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }
});
