#![no_main]

use fplwb_core::algebra::{unitriangular_inverse, ExactMatrix};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = ExactMatrix::from_json(text) {
        assert_eq!(ExactMatrix::from_json(&m.to_json()).unwrap(), m);
        if let Ok(inv) = unitriangular_inverse(&m) {
            assert!(m.mul(&inv).is_identity());
        }
    }
});
