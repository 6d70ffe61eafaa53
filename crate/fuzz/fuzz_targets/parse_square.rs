#![no_main]
use hlm_core::classify::ExtendedSquare;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(s) = ExtendedSquare::parse(data) {
        assert_eq!(ExtendedSquare::parse(&s.to_string()).unwrap(), s);
    }
});
