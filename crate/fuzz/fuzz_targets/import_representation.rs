#![no_main]
use hlm_core::io::{export_representation, import_representation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(rep) = import_representation(data) {
        let text = export_representation(&rep);
        assert_eq!(import_representation(&text).unwrap().images, rep.images);
    }
});
