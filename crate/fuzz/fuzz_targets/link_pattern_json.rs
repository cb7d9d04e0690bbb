#![no_main]

use fplwb_core::words::LinkPattern;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<LinkPattern>(data) {
        let again: LinkPattern = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(again, p);
        if let Some(&max) = p.labels().iter().max() {
            let modulus = max.max(2 * p.size() as u32);
            let _ = p.rotate(modulus);
        }
    }
});
