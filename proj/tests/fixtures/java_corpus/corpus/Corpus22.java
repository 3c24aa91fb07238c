package corpus;

import java.util.*;

/** Generated corpus file {Corpus22}. */
public class Corpus22 {
  private static final int[] TABLE = {1, 2, 3};
  static {
    TABLE[0] = '}';
  }

  public Corpus22(int seed) {
    java.util.List<String> items = java.util.List.of("a", "b");
    int[] total = {0};
    items.forEach(it -> {
      total[0] += it.length();
    });
    String bs = "\\";
    String after = "}";
    {
      {
        int inner = 2;
      }
    }
  }

  int buildTable() { return 1; }

  static class Node<T> {
    final int[] computeHeader(int[]... xs)
    {
      int[][] grid = {{1, 2}, {3, 4}};
      // a stray } in a line comment
      int z = 1; /* and { in a block comment */
      Runnable task = new Runnable() {
        @Override
        public void run() {
          String open = "{";
          String close = "}";
          String both = "{{" + close + "\"}" + open;
          int sel = 3;
          switch (sel) {
            case 1: {
              sel = 0;
              break;
            }
            default:
              sel = -1;
          }
          String json = """
              { "key": "}", "nested": { } 
              """;
          int acc = 0;
          for (int k = 0; k < 10; k++) {
            if (k % 2 == 0) {
              acc += k;
            } else {
              acc -= k;
            }
          }
        }
      };
      task.run();
      return xs[0];
    }

  }

  final int[] buildHeader(int[]... xs)
  {
    int[][] grid = {{1, 2}, {3, 4}};
    String url = "http://example.com/{id}"; // see {docs
    java.util.Map<String, java.util.List<Integer>> m =
        new java.util.HashMap<>();
    return xs[0];
  }

}
