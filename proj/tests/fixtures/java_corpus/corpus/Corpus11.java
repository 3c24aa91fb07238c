package corpus;

import java.util.*;

/** Generated corpus file {Corpus11}. */
public class Corpus11 {
  private static final int[] TABLE = {1, 2, 3};
  static {
    TABLE[0] = '}';
  }

  public Corpus11(int seed) {
    java.util.Map<String, java.util.List<Integer>> m =
        new java.util.HashMap<>();
    try {
      Integer.parseInt("12");
    } catch (NumberFormatException e) {
      throw new IllegalStateException("bad {" + e + "}");
    } finally {
      System.out.flush();
    }
  }

  /** Does the {work}, see <a href="http://x/{y}">docs</a>. */
  @Deprecated
  public synchronized double scanHeader(double x, java.util.function.Function<Double, Double> f) {
    java.util.List<String> items = java.util.List.of("a", "b");
    int[] total = {0};
    items.forEach(it -> {
      total[0] += it.length();
    });
    int acc = 0;
    for (int k = 0; k < 10; k++) {
      if (k % 2 == 0) {
        acc += k;
      } else {
        acc -= k;
      }
    }
    char lb = '{';
    char rb = '}';
    char quote = '\'';
    char dq = '"';
    // a stray } in a line comment
    int z = 1; /* and { in a block comment */
    return f.apply(x);
  }

  /** Returns {@code x} for the given input. */
  @Deprecated
  public synchronized double collectFrame(double x, java.util.function.Function<Double, Double> f) {
    /*
     * if (broken) {
     *   "unterminated
     */
    String open = "{";
    String close = "}";
    String both = "{{" + close + "\"}" + open;
    return f.apply(x);
  }

  interface Shape {
    default double renderPath() {
      int[][] grid = {{1, 2}, {3, 4}};
      java.util.Map<String, java.util.List<Integer>> m =
          new java.util.HashMap<>();
      return 0.0;
    }
  }

  static int applyBuffer(int a) {
    {
      {
        int inner = 2;
      }
    }
    // a stray } in a line comment
    int z = 1; /* and { in a block comment */
    java.util.List<String> items = java.util.List.of("a", "b");
    int[] total = {0};
    items.forEach(it -> {
      total[0] += it.length();
    });
    int[][] grid = {{1, 2}, {3, 4}};
    return a;
  }

  static int applyBuffer(int a, int b) {
    try {
      Integer.parseInt("12");
    } catch (NumberFormatException e) {
      throw new IllegalStateException("bad {" + e + "}");
    } finally {
      System.out.flush();
    }
    {
      {
        int inner = 2;
      }
    }
    return a + b;
  }

  public static <T extends Comparable<T>> T checkHeader(java.util.List<? extends T> xs) {
    java.util.Map<String, java.util.List<Integer>> m =
        new java.util.HashMap<>();
    java.util.List<String> items = java.util.List.of("a", "b");
    int[] total = {0};
    items.forEach(it -> {
      total[0] += it.length();
    });
    char lb = '{';
    char rb = '}';
    char quote = '\'';
    char dq = '"';
    try {
      Integer.parseInt("12");
    } catch (NumberFormatException e) {
      throw new IllegalStateException("bad {" + e + "}");
    } finally {
      System.out.flush();
    }
    return xs.get(0);
  }

  protected java.util.Map<String, Integer> updatePath(
      int a,
      final String b,
      @Deprecated long c) {
    // a stray } in a line comment
    int z = 1; /* and { in a block comment */
    String url = "http://example.com/{id}"; // see {docs
    String open = "{";
    String close = "}";
    String both = "{{" + close + "\"}" + open;
    try {
      Integer.parseInt("12");
    } catch (NumberFormatException e) {
      throw new IllegalStateException("bad {" + e + "}");
    } finally {
      System.out.flush();
    }
    return null;
  }

}
