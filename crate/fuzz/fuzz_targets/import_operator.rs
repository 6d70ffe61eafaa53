#![no_main]
use hlm_core::io::{export_operator, import_operator};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(op) = import_operator(data) {
        assert_eq!(import_operator(&export_operator(&op)).unwrap(), op);
    }
});
