#![no_main]
use hlm_cli::parse_config;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(map) = parse_config(data) {
        let text: String = map.iter().map(|(k, v)| format!("{k}={v}\n")).collect();
        assert_eq!(parse_config(&text).unwrap(), map);
    }
});
