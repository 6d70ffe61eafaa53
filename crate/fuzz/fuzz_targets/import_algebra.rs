#![no_main]
use hlm_core::io::{export_algebra, import_algebra};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(sc) = import_algebra(data) {
        let text = export_algebra(&sc);
        assert_eq!(export_algebra(&import_algebra(&text).unwrap()), text);
    }
});
