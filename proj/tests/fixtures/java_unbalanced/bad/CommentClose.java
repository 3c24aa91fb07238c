package bad;

public class CommentClose {
  void log(String msg) {
    if (msg.isEmpty()) {
      return;
    }
    System.out.println(msg);
  // }
/* } } */
