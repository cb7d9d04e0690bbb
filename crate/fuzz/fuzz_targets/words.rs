#![no_main]

use fplwb_core::words::BinaryWord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = text.parse::<BinaryWord>() {
        assert_eq!(w.to_string(), text);
        assert_eq!(w.conjugate().conjugate(), w);
        if w.count_zeros() == w.count_ones() {
            assert_eq!(w.diagram().to_word(), w);
        }
        match BinaryWord::parse_dyck(text) {
            Ok(d) => assert_eq!(d.to_matching().unwrap().to_dyck().unwrap(), d),
            Err(_) => assert!(!w.is_dyck()),
        }
    }
});
