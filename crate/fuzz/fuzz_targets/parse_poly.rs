#![no_main]
use hlm_core::algebra::parse_poly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if data.len() > 256 {
        return;
    }
    if let Ok(p) = parse_poly(data) {
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
});
