package demo.search;

public final class SearchRunner {

  private SearchRunner() {}

  /**
   * Linear scan for the given element; returns its index or -1.
   */
  static int search(int[] data, int target) {
    for (int i = 0; i < data.length; i++) {
      if (data[i] == target) {
        return i;
      }
    }
    return -1;
  }
}
