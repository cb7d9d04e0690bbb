#![no_main]

use fplwb_core::fpl::PatternCensus;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(census) = PatternCensus::from_json(text) {
        assert_eq!(PatternCensus::from_json(&census.to_json()).unwrap(), census);
    }
});
