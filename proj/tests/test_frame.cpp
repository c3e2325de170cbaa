#include <doctest.h>

#include "support.hpp"
#include "zucaead/frame.hpp"

using namespace zucaead;
using testsupport::hex;

TEST_CASE("frame layout is byte exact") {
  const SealedFrame f{ZucVariant::Zuc256Iv184, AeadMode::Mur, 96, Bytes(23, 0xaa), hex("0102"), Bytes(12, 0xcc)};
  const Bytes enc = encode_frame(f);
  CHECK(enc.size() == 12 + 23 + 2 + 12);
  CHECK(Bytes(enc.begin(), enc.begin() + 12) == hex("5a554341454144310202" "0060"));
  CHECK(decode_frame(enc) == f);
}

TEST_CASE("empty body") {
  const SealedFrame f{ZucVariant::Zuc128, AeadMode::Gxm, 128, Bytes(16, 1), {}, Bytes(16, 2)};
  const Bytes enc = encode_frame(f);
  CHECK(enc.size() == 12 + 16 + 16);
  CHECK(decode_frame(enc) == f);
}

TEST_CASE("malformed frames are rejected") {
  const SealedFrame f{ZucVariant::Zuc256Iv128, AeadMode::Gxm, 32, Bytes(16, 1), hex("ff"), Bytes(4, 2)};
  const Bytes enc = encode_frame(f);
  CHECK_THROWS_AS(decode_frame(ByteView(enc).first(12 + 16 + 3)), ParameterError);
  CHECK_THROWS_AS(decode_frame(ByteView(enc).first(5)), ParameterError);
  Bytes bad = enc;
  bad[0] = 'X';
  CHECK_THROWS_AS(decode_frame(bad), ParameterError);
  bad = enc;
  bad[8] = 4;
  CHECK_THROWS_AS(decode_frame(bad), ParameterError);
  bad = enc;
  bad[9] = 0;
  CHECK_THROWS_AS(decode_frame(bad), ParameterError);
  bad = enc;
  bad[11] = 33;
  CHECK_THROWS_AS(decode_frame(bad), ParameterError);
  SealedFrame wrong = f;
  wrong.tag.pop_back();
  CHECK_THROWS_AS(encode_frame(wrong), ParameterError);
}
