#![no_main]
use hlm_core::algebra::GaussRational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(z) = GaussRational::parse(data) {
        assert_eq!(GaussRational::parse(&z.to_string()).unwrap(), z);
    }
});
