#pragma once

namespace qsym {

// 128-bit unsigned intermediate for 64-bit modular and pairing arithmetic.
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

}  // namespace qsym
