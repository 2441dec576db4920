#ifndef NAMEREL_TESTS_TEST_PATHS_H_
#define NAMEREL_TESTS_TEST_PATHS_H_

#include <string>

namespace namerel::testing {

inline std::string TestData(const std::string& file) {
  return std::string(NAMEREL_TEST_DATA_DIR) + "/" + file;
}

inline std::string ShippedData(const std::string& file) {
  return std::string(NAMEREL_DATA_DIR) + "/" + file;
}

}  // namespace namerel::testing

#endif  // NAMEREL_TESTS_TEST_PATHS_H_
